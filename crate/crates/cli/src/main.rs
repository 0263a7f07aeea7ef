use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use grassarc::lct::{arnold_multiplicity, lct_equals_codim, lct_rectangular, lct_table, rational_string};
use grassarc::nash::{codim_chain, compare, discrepancy_data, nash_valuations};
use grassarc::networks::{generic_arc, plucker_ord};
use grassarc::{
    ArcMatrix, Error, GrassmannShape, MultiIndex, Partition, PlanePartition, Rational, UnitSource,
};

#[derive(Parser)]
#[command(name = "grassarc", version, about = "Arc-space invariants of Grassmannian Schubert varieties")]
struct Cli {
    /// Emit a single JSON document instead of plain lines.
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,
    /// Plain line-oriented output (the default).
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ShapeArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

impl ShapeArgs {
    fn shape(self) -> Result<GrassmannShape, Error> {
        GrassmannShape::new(self.k, self.n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Log canonical threshold and Arnold multiplicity of a Schubert variety.
    Lct {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Partition, e.g. "3,3,1".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Log canonical thresholds of every Schubert variety of the shape.
    LctTable {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Invariant factor profile of an arc matrix.
    Profile {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Rows separated by ';', entries by ','.
        #[arg(long)]
        arc: String,
        #[arg(long, default_value_t = 16)]
        prec: usize,
    },
    /// Order of contact with a Schubert variety or a Plücker coordinate.
    Order {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        beta: String,
        #[arg(long, conflicts_with = "plucker", required_unless_present = "plucker")]
        lambda: Option<String>,
        /// Multi-index, e.g. "[1,3]".
        #[arg(long)]
        plucker: Option<String>,
    },
    /// Decide whether the closure of one contact stratum contains another.
    NashCompare {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        beta2: String,
    },
    /// Codimension, multiplicity and discrepancy of a contact stratum.
    Codim {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        beta: String,
    },
    /// The one-box chain through a plane partition used for codimensions.
    Chain {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        beta: String,
    },
    /// Singular locus components and Nash valuations.
    Sing {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        lambda: String,
    },
    /// A generic arc of a contact stratum.
    GenericArc {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        beta: String,
        #[arg(long, default_value_t = 16)]
        prec: usize,
        /// Random units from this seed; all units are 1 when absent.
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Output {
    json: Value,
    plain: Vec<String>,
}

fn rational_rows(rows: &[Vec<Rational>]) -> Vec<String> {
    rows.iter()
        .map(|r| r.iter().map(rational_string).collect::<Vec<_>>().join(" "))
        .collect()
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn cmd_lct(shape: GrassmannShape, lambda: &str) -> Result<Output, Error> {
    let lam = Partition::parse(shape, lambda)?;
    let r = arnold_multiplicity(&lam)?;
    let rect = if lam.is_rectangular() {
        Some(lct_rectangular(shape, lam.num_parts(), lam.part(1))?)
    } else {
        None
    };
    let rim = lct_equals_codim(&lam).ok();
    let mut plain = vec![
        format!("lct {}", rational_string(&r.lct)),
        format!("arnold {}", rational_string(&r.arnold)),
        format!("codim {}", lam.size()),
    ];
    if let Some(c) = &rect {
        plain.push(format!("closed-form {}", rational_string(c)));
    }
    plain.push("vertex".into());
    plain.extend(rational_rows(&r.vertex));
    plain.push(format!("witness {}", r.witness));
    let mut doc = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
    doc["shape"] = json!(shape.to_string());
    doc["lambda"] = parts_json(&lam);
    doc["codim"] = json!(lam.size());
    doc["closed_form"] = json!(rect.as_ref().map(rational_string));
    doc["lct_equals_codim"] = json!(rim);
    Ok(Output { json: doc, plain })
}

fn cmd_lct_table(shape: GrassmannShape) -> Result<Output, Error> {
    let table = lct_table(shape)?;
    let plain = table
        .iter()
        .map(|(l, r)| format!("{l} lct {} arnold {}", rational_string(&r.lct), rational_string(&r.arnold)))
        .collect();
    let rows: Vec<Value> = table
        .iter()
        .map(|(l, r)| {
            json!({
                "lambda": parts_json(l),
                "lct": rational_string(&r.lct),
                "arnold": rational_string(&r.arnold),
            })
        })
        .collect();
    Ok(Output {
        json: json!({ "shape": shape.to_string(), "table": rows }),
        plain,
    })
}

fn cmd_profile(shape: GrassmannShape, arc: &str, prec: usize) -> Result<Output, Error> {
    let arc = ArcMatrix::parse(shape, arc, prec)?;
    let alpha = arc.essential_profile()?;
    let beta = PlanePartition::from_essential(&alpha)?;
    let codim = beta.volume();
    Ok(Output {
        plain: vec![
            format!("beta {beta}"),
            format!("alpha {alpha}"),
            format!("codim {codim}"),
        ],
        json: json!({ "beta": beta, "alpha": alpha, "codim": codim }),
    })
}

fn cmd_order(
    shape: GrassmannShape,
    beta: &str,
    lambda: Option<&str>,
    plucker: Option<&str>,
) -> Result<Output, Error> {
    let beta = PlanePartition::parse(shape, beta)?;
    let (what, value) = match (lambda, plucker) {
        (Some(l), _) => {
            let lam = Partition::parse(shape, l)?;
            (json!({ "lambda": parts_json(&lam) }), beta.ord_schubert(&lam)?)
        }
        (None, Some(i)) => {
            let idx = MultiIndex::parse(shape, i)?;
            (json!({ "plucker": idx.entries() }), plucker_ord(&beta, &idx)?)
        }
        (None, None) => return Err(Error::InvalidInput("give --lambda or --plucker".into())),
    };
    let mut doc = what;
    doc["order"] = json!(value);
    Ok(Output {
        json: doc,
        plain: vec![value.to_string()],
    })
}

fn cmd_nash_compare(shape: GrassmannShape, beta: &str, beta2: &str) -> Result<Output, Error> {
    let b = PlanePartition::parse(shape, beta)?;
    let b2 = PlanePartition::parse(shape, beta2)?;
    let v = compare(&b, &b2)?;
    let doc = serde_json::to_value(&v).map_err(|e| Error::Internal(e.to_string()))?;
    let kind = doc["witness"]["kind"].as_str().unwrap_or("none").to_string();
    let relation = doc["relation"].as_str().unwrap_or("unknown").to_string();
    Ok(Output {
        plain: vec![format!("relation {relation}"), format!("witness {kind}")],
        json: doc,
    })
}

fn cmd_codim(shape: GrassmannShape, beta: &str) -> Result<Output, Error> {
    let b = PlanePartition::parse(shape, beta)?;
    let d = discrepancy_data(&b)?;
    Ok(Output {
        plain: vec![
            format!("codim {}", d.codim),
            format!("multiplicity {}", d.multiplicity),
            format!("discrepancy {}", d.discrepancy),
        ],
        json: serde_json::to_value(&d).map_err(|e| Error::Internal(e.to_string()))?,
    })
}

fn cmd_chain(shape: GrassmannShape, beta: &str) -> Result<Output, Error> {
    let b = PlanePartition::parse(shape, beta)?;
    let chain = codim_chain(&b)?;
    Ok(Output {
        plain: chain.iter().map(|p| p.to_string()).collect(),
        json: json!({ "chain": chain, "index": b.volume() }),
    })
}

fn cmd_sing(shape: GrassmannShape, lambda: &str) -> Result<Output, Error> {
    let lam = Partition::parse(shape, lambda)?;
    let comps = lam.singular_components();
    let vals = nash_valuations(&lam)?;
    let mut plain = vec![format!("smooth {}", comps.is_empty())];
    plain.extend(comps.iter().map(|c| format!("component {c}")));
    plain.extend(vals.iter().map(|v| format!("valuation {v}")));
    Ok(Output {
        json: json!({
            "smooth": comps.is_empty(),
            "components": comps.iter().map(parts_json).collect::<Vec<_>>(),
            "valuations": vals,
        }),
        plain,
    })
}

fn cmd_generic_arc(
    shape: GrassmannShape,
    beta: &str,
    prec: usize,
    seed: Option<u64>,
) -> Result<Output, Error> {
    let b = PlanePartition::parse(shape, beta)?;
    let units = seed.map_or(UnitSource::Ones, UnitSource::Seeded);
    let arc = generic_arc(&b, prec, units)?;
    let text = arc.to_string();
    Ok(Output {
        json: json!({ "arc": text, "precision": prec }),
        plain: vec![text],
    })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Lct { shape, lambda } => cmd_lct(shape.shape()?, lambda),
        Command::LctTable { shape } => cmd_lct_table(shape.shape()?),
        Command::Profile { shape, arc, prec } => cmd_profile(shape.shape()?, arc, *prec),
        Command::Order {
            shape,
            beta,
            lambda,
            plucker,
        } => cmd_order(shape.shape()?, beta, lambda.as_deref(), plucker.as_deref()),
        Command::NashCompare { shape, beta, beta2 } => cmd_nash_compare(shape.shape()?, beta, beta2),
        Command::Codim { shape, beta } => cmd_codim(shape.shape()?, beta),
        Command::Chain { shape, beta } => cmd_chain(shape.shape()?, beta),
        Command::Sing { shape, lambda } => cmd_sing(shape.shape()?, lambda),
        Command::GenericArc {
            shape,
            beta,
            prec,
            seed,
        } => cmd_generic_arc(shape.shape()?, beta, *prec, *seed),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PrecisionExceeded(_) => 3,
        Error::Internal(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                for line in out.plain {
                    println!("{line}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
