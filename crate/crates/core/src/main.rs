use std::error::Error;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use gallai::census::CensusReport;
use gallai::coloring::{Color, Coloring};
use gallai::construct::{
    construct_f_lower, construct_gr_k3_extremal, construct_gr_k4e_extremal,
    construct_multiplicity_extremal, construct_nim_star, goodman_extremal_2coloring,
    paley17_coloring, pentagon_coloring,
};
use gallai::formulas::{
    ex_star, g_mixed, g_multiplicity_bounds, goodman_m2, gr_k3, gr_mixed_k4e, gr_star_k3,
    m3_formula, turan_count,
};
use gallai::grstar::{check_gr_star_conditions, max_gr_star_witness, ExtendedColoring};
use gallai::partition::{coarsen_to_min_parts, find_gallai_partition};
use gallai::search::{
    exists_avoiding, max_protected_edges, min_mono_triangles, SearchOptions, SearchOutcome, Target,
    DEFAULT_BUDGET,
};
use gallai::suite::{verify_suite, Level};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

/// Construct, decompose, count and search edge-colorings of complete graphs.
#[derive(Parser)]
#[command(name = "gallai", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form value: goodman-m2 N, m3 N, gr-k3 K, gr-k4e K S,
    /// g-mixed K S, gr-star-k3 K, turan N R, ex-star N H, g-bounds K N.
    Formula {
        name: String,
        args: Vec<u64>,
    },
    /// Build a coloring: pentagon [K], paley17 [K], gr-k3 K, gr-k4e K S,
    /// multiplicity K N, f-lower N K, nim-star N H K, goodman2 N.
    Construct {
        family: String,
        args: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Triangle census, protected edges and optional star-free edges as JSON.
    Count {
        file: PathBuf,
        /// Also count edges in no monochromatic K_{1,H}.
        #[arg(long = "h")]
        h: Option<usize>,
    },
    /// Find a Gallai partition of a `.gec` coloring.
    Partition {
        file: PathBuf,
        /// Coarsen to the fewest parts.
        #[arg(long)]
        minimize: bool,
    },
    /// Check an extended coloring in `.gecx` form.
    GrstarCheck { file: PathBuf },
    /// Search for an extended coloring on N vertices with K colors.
    GrstarSearch { n: usize, k: usize },
    /// Exhaustive search: min-mono, avoid or max-protected.
    Search {
        objective: String,
        n: usize,
        k: usize,
        /// Restrict to colorings without rainbow triangles.
        #[arg(long)]
        gallai: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Per-color forbidden subgraphs for `avoid`, e.g. `k4e,k3`.
        #[arg(long, value_delimiter = ',', default_value = "k3")]
        targets: Vec<Target>,
    },
    /// Run the self-check battery; nonzero exit if any check fails.
    VerifySuite {
        #[arg(long, default_value = "fast")]
        level: Level,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Formula { name, args } => println!("{}", formula(&name, &args)?),
        Command::Construct {
            family,
            args,
            seed,
            output,
        } => {
            let c = construct(&family, &args, seed)?;
            emit(&c.to_gec(), output.as_deref())?;
        }
        Command::Count { file, h } => {
            let c: Coloring = read_input(&file)?.parse()?;
            println!("{}", serde_json::to_string_pretty(&CensusReport::new(&c, h))?);
        }
        Command::Partition { file, minimize } => {
            let c: Coloring = read_input(&file)?.parse()?;
            let mut p = find_gallai_partition(&c)?;
            if minimize {
                p = coarsen_to_min_parts(&c, &p);
            }
            println!("parts {}", p.parts.len());
            for part in &p.parts {
                println!("{}", join(part.iter().map(|v| v + 1)));
            }
            println!("between-colors {}", join(p.between_colors.iter()));
            println!("reduced");
            print!("{}", p.reduced);
        }
        Command::GrstarCheck { file } => {
            let e: ExtendedColoring = read_input(&file)?.parse()?;
            let r = check_gr_star_conditions(&e);
            let report = json!({
                "schema": "1",
                "n": e.n(),
                "k": e.k(),
                "gallai": r.gallai,
                "monoTriangleFree": r.mono_triangle_free,
                "singletonClash": r.singleton_clash.map(|(i, j)| [i + 1, j + 1]),
                "passes": r.passes(),
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::GrstarSearch { n, k } => {
            let r = max_gr_star_witness(n, k, &SearchOptions::default())?;
            let report = json!({
                "schema": "1",
                "n": n,
                "k": k,
                "exists": r.exists,
                "nodesExplored": r.nodes_explored,
                "exhaustive": r.exhaustive,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
            if let Some(w) = r.witness {
                print!("{w}");
            }
        }
        Command::Search {
            objective,
            n,
            k,
            gallai,
            budget,
            jobs,
            targets,
        } => {
            let opts = SearchOptions {
                budget,
                jobs,
                ..SearchOptions::default()
            };
            let out = search(&objective, n, k, gallai, &targets, &opts)?;
            let mut report = serde_json::to_value(&out)?;
            if let Value::Object(map) = &mut report {
                map.insert("schema".into(), json!("1"));
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
            if let Some(w) = &out.witness {
                print!("{w}");
            }
        }
        Command::VerifySuite { level, json } => {
            let report = verify_suite(level);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    println!("{mark} {:<22} {:>8.2}s  {}", c.name, c.seconds, c.detail);
                }
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()).into()),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn arity<T: Copy>(name: &str, args: &[T], want: usize) -> Result<()> {
    if args.len() == want {
        Ok(())
    } else {
        Err(format!("{name} takes {want} argument(s), got {}", args.len()).into())
    }
}

fn formula(name: &str, args: &[u64]) -> Result<String> {
    let unary = |f: fn(u64) -> String| -> Result<String> {
        arity(name, args, 1)?;
        Ok(f(args[0]))
    };
    Ok(match name {
        "goodman-m2" => unary(|n| goodman_m2(n).to_string())?,
        "m3" => unary(|n| {
            let v = m3_formula(n);
            format!("{} {}", v.value, v.validity)
        })?,
        "gr-k3" => {
            arity(name, args, 1)?;
            gr_k3(args[0])?.to_string()
        }
        "gr-star-k3" => {
            arity(name, args, 1)?;
            gr_star_k3(args[0])?.to_string()
        }
        "gr-k4e" => {
            arity(name, args, 2)?;
            gr_mixed_k4e(args[0], args[1])?.to_string()
        }
        "g-mixed" => {
            arity(name, args, 2)?;
            g_mixed(args[0], args[1])?.to_string()
        }
        "turan" => {
            arity(name, args, 2)?;
            turan_count(args[0], args[1])?.to_string()
        }
        "ex-star" => {
            arity(name, args, 2)?;
            ex_star(args[0], args[1])?.to_string()
        }
        "g-bounds" => {
            arity(name, args, 2)?;
            let b = g_multiplicity_bounds(args[0], args[1])?;
            format!("upper {}\nlower {}", b.upper, b.lower)
        }
        other => return Err(format!("unknown formula `{other}`").into()),
    })
}

fn construct(family: &str, args: &[usize], seed: u64) -> Result<Coloring> {
    let palette = |default: usize| -> Result<usize> {
        match args {
            [] => Ok(default),
            [k] => Ok(*k),
            _ => Err(format!("{family} takes at most one argument").into()),
        }
    };
    Ok(match family {
        "pentagon" => pentagon_coloring(1, 2, palette(2)?)?,
        "paley17" => paley17_coloring(1, 2, palette(2)?)?,
        "gr-k3" => {
            arity(family, args, 1)?;
            construct_gr_k3_extremal(args[0])?
        }
        "gr-k4e" => {
            arity(family, args, 2)?;
            construct_gr_k4e_extremal(args[0], args[1])?
        }
        "multiplicity" => {
            arity(family, args, 2)?;
            construct_multiplicity_extremal(args[0], args[1])?
        }
        "f-lower" => {
            arity(family, args, 2)?;
            construct_f_lower(args[0], args[1])?
        }
        "nim-star" => {
            arity(family, args, 3)?;
            construct_nim_star(args[0], args[1], args[2], seed)?.coloring
        }
        "goodman2" => {
            arity(family, args, 1)?;
            goodman_extremal_2coloring(args[0], 1 as Color, 2, 2)?
        }
        other => return Err(format!("unknown family `{other}`").into()),
    })
}

fn search(
    objective: &str,
    n: usize,
    k: usize,
    gallai: bool,
    targets: &[Target],
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    Ok(match objective {
        "min-mono" => min_mono_triangles(n, k, gallai, opts)?,
        "max-protected" => max_protected_edges(n, k, opts)?,
        "avoid" => {
            let targets = match targets {
                [t] => vec![*t; k],
                ts => ts.to_vec(),
            };
            exists_avoiding(n, k, &targets, gallai, opts)?
        }
        other => return Err(format!("unknown objective `{other}` (min-mono, avoid, max-protected)").into()),
    })
}
