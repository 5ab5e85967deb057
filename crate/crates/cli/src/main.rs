//! Command-line front end: multiplication tables, generated ideals,
//! simplicity tests, centers, and derived subalgebras, with text or JSON
//! output.
//!
//! Exit codes: 0 success, 2 generator parse error, 3 generator outside the
//! algebra, 4 inconclusive simplicity verdict, 5 invalid algebra or
//! characteristic.

mod algebra_arg;
mod expr;
mod render;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use liealg::ideal::{self, InconclusiveReason, NonSimpleReason, Simplicity};
use liealg::{AlgebraDefinition, Characteristic, IdealResult, LieAlgebra};

use expr::GenError;

#[derive(Parser)]
#[command(
    name = "lie-ideal",
    version,
    about = "Exact Lie algebra computations over F_p or the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the multiplication table of the algebra
    Table(AlgebraArgs),
    /// Compute the ideal generated by a list of elements
    Ideal(IdealArgs),
    /// Test whether the algebra is simple
    Simple(SimpleArgs),
    /// Compute the center
    Center(AlgebraArgs),
    /// Compute the derived subalgebra
    Derived(AlgebraArgs),
}

#[derive(Args)]
struct AlgebraArgs {
    /// Algebra: glN, slN, "ut N", "sut N", "diag N", or file:PATH
    #[arg(long)]
    algebra: String,

    /// Field characteristic: 0 or a prime
    #[arg(long = "char")]
    characteristic: u64,

    /// Emit a machine-readable JSON envelope
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    base: AlgebraArgs,

    /// Comma-separated generators, e.g. "x2" or "x3, x3 - x1" or "[0,1,0,0]"
    #[arg(long)]
    gens: String,
}

#[derive(Args)]
struct SimpleArgs {
    #[command(flatten)]
    base: AlgebraArgs,

    /// Largest projective point count to enumerate exhaustively
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,

    /// Worker threads for the enumeration (the verdict does not depend on this)
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table(args) => run_table(args),
        Command::Ideal(args) => run_ideal(args),
        Command::Simple(args) => run_simple(args),
        Command::Center(args) => run_center(args),
        Command::Derived(args) => run_derived(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

/// Resolves `--algebra` and `--char` into a built algebra (exit 5 on any
/// failure).
fn setup(
    args: &AlgebraArgs,
) -> Result<(LieAlgebra, String, AlgebraDefinition, Characteristic), Failure> {
    let c = Characteristic::new(args.characteristic).map_err(|e| Failure::new(5, e.to_string()))?;
    let choice = algebra_arg::parse_algebra(&args.algebra).map_err(|m| Failure::new(5, m))?;
    let (algebra, name, def) =
        algebra_arg::build_algebra(&choice, c).map_err(|m| Failure::new(5, m))?;
    Ok((algebra, name, def, c))
}

fn envelope(
    command: &str,
    def: &AlgebraDefinition,
    c: Characteristic,
    result: Value,
    trace: Option<Value>,
) -> Value {
    json!({
        "command": command,
        "algebra": serde_json::to_value(def).expect("definition serializes"),
        "char": c.value(),
        "result": result,
        "trace": trace,
    })
}

fn trace_json(result: &IdealResult) -> Value {
    Value::from(
        result
            .trace
            .iter()
            .map(|entry| {
                json!({
                    "depth": entry.depth,
                    "dimension": entry.dimension,
                    "spanning_set": entry.spanning_set.iter()
                        .map(|e| render::coords_json(e.coords()))
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    )
}

fn basis_json(result: &IdealResult) -> Value {
    Value::from(
        result
            .basis
            .iter()
            .map(|e| render::coords_json(e.coords()))
            .collect::<Vec<_>>(),
    )
}

fn print_trace(result: &IdealResult) {
    for entry in &result.trace {
        println!(
            "Depth = {} -> {}",
            entry.depth,
            render::set(&entry.spanning_set)
        );
    }
}

fn run_table(args: AlgebraArgs) -> Result<i32, Failure> {
    let (l, _, def, c) = setup(&args)?;
    if args.json {
        let constants: Vec<Vec<Value>> = (0..l.dim())
            .map(|i| {
                (0..l.dim())
                    .map(|j| render::coords_json(l.basis_bracket(i, j)))
                    .collect()
            })
            .collect();
        let result = json!({
            "dimension": l.dim(),
            "structure_constants": constants,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope("table", &def, c, result, None)).unwrap()
        );
    } else {
        print!("{}", render::table(&l));
    }
    Ok(0)
}

fn run_ideal(args: IdealArgs) -> Result<i32, Failure> {
    let (l, _, def, c) = setup(&args.base)?;
    let gens = expr::parse_generators(&args.gens, &l).map_err(|e| match e {
        GenError::Syntax(m) => Failure::new(2, m),
        GenError::Semantic(m) => Failure::new(3, m),
    })?;
    let elements: Vec<_> = gens.iter().map(|g| g.element.clone()).collect();
    let result =
        ideal::ideal_generated(&l, &elements).map_err(|e| Failure::new(3, e.to_string()))?;
    let gen_names: Vec<String> = gens.iter().map(|g| g.display.clone()).collect();
    if args.base.json {
        let payload = json!({
            "generators": elements.iter()
                .map(|e| render::coords_json(e.coords()))
                .collect::<Vec<_>>(),
            "basis": basis_json(&result),
            "dimension": result.dimension,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope(
                "ideal",
                &def,
                c,
                payload,
                Some(trace_json(&result))
            ))
            .unwrap()
        );
    } else {
        print_trace(&result);
        println!(
            "Ideal <{}> = {} with dimension = {} and char(K)={}",
            gen_names.join(", "),
            render::set(&result.basis),
            result.dimension,
            c.value()
        );
    }
    Ok(0)
}

fn run_derived(args: AlgebraArgs) -> Result<i32, Failure> {
    let (l, _, def, c) = setup(&args)?;
    let result = ideal::derived_subalgebra(&l);
    if args.json {
        let payload = json!({
            "basis": basis_json(&result),
            "dimension": result.dimension,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope(
                "derived",
                &def,
                c,
                payload,
                Some(trace_json(&result))
            ))
            .unwrap()
        );
    } else {
        print_trace(&result);
        println!(
            "Derived subalgebra = {} with dimension = {} and char(K)={}",
            render::set(&result.basis),
            result.dimension,
            c.value()
        );
    }
    Ok(0)
}

fn run_center(args: AlgebraArgs) -> Result<i32, Failure> {
    let (l, _, def, c) = setup(&args)?;
    let z = ideal::center(&l);
    if args.json {
        let payload = json!({
            "basis": z.iter().map(|e| render::coords_json(e.coords())).collect::<Vec<_>>(),
            "dimension": z.len(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&envelope("center", &def, c, payload, None)).unwrap()
        );
    } else {
        println!(
            "Center = {} with dimension = {} and char(K)={}",
            render::set(&z),
            z.len(),
            c.value()
        );
    }
    Ok(0)
}

fn reason_text(reason: NonSimpleReason) -> &'static str {
    match reason {
        NonSimpleReason::Abelian => "abelian",
        NonSimpleReason::ProperDerivedSubalgebra => "proper derived subalgebra",
        NonSimpleReason::NontrivialCenter => "nontrivial center",
        NonSimpleReason::ProperGeneratedIdeal => "a single element generates a proper ideal",
    }
}

fn run_simple(args: SimpleArgs) -> Result<i32, Failure> {
    let (l, _, def, c) = setup(&args.base)?;
    let verdict = ideal::is_simple_with_threads(&l, args.cap, args.threads.max(1));
    let json_mode = args.base.json;
    match verdict {
        Simplicity::Simple { points_tested } => {
            if json_mode {
                let payload = json!({
                    "verdict": "simple",
                    "points_tested": points_tested,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope("simple", &def, c, payload, None))
                        .unwrap()
                );
            } else {
                println!("simple ({points_tested} candidates tested)");
            }
            Ok(0)
        }
        Simplicity::NotSimple { reason, witness } => {
            if json_mode {
                let payload = json!({
                    "verdict": "not_simple",
                    "reason": reason_text(reason),
                    "witness": {
                        "basis": basis_json(&witness),
                        "dimension": witness.dimension,
                    },
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope("simple", &def, c, payload, None))
                        .unwrap()
                );
            } else {
                println!(
                    "not simple: {}; witness ideal {} with dimension = {}",
                    reason_text(reason),
                    render::set(&witness.basis),
                    witness.dimension
                );
            }
            Ok(0)
        }
        Simplicity::Inconclusive {
            reason,
            points_tested,
        } => {
            // Report the quick rejections that did pass before giving up.
            let derived_dim = ideal::derived_subalgebra(&l).dimension;
            let center_dim = ideal::center(&l).len();
            let reason_line = match reason {
                InconclusiveReason::CharacteristicZero => {
                    "characteristic 0 rules out exhaustive enumeration".to_string()
                }
                InconclusiveReason::CapExceeded { cap } => format!(
                    "projective point count exceeds cap {cap}; only the {points_tested} basis directions were tested"
                ),
            };
            if json_mode {
                let payload = json!({
                    "verdict": "inconclusive",
                    "reason": reason_line,
                    "points_tested": points_tested,
                    "derived_dimension": derived_dim,
                    "center_dimension": center_dim,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope("simple", &def, c, payload, None))
                        .unwrap()
                );
            } else {
                println!(
                    "inconclusive: {reason_line} (derived subalgebra dimension = {derived_dim}, center dimension = {center_dim}, n = {})",
                    l.dim()
                );
            }
            Ok(4)
        }
    }
}
