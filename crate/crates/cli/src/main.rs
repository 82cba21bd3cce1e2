//! Command-line surface over the wedge-calculus library: complex
//! constructions, characteristic-matrix checks, small-cover censuses,
//! classification, projectivity sweeps, and lifting.
//!
//! Exit codes: 0 on success, 2 on input errors, 3 when a command reports
//! property-violation findings (an obstruction solution, a non-projective
//! member, and so on).

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};

use toricwedge::charmap::{CharMatrix, Ring};
use toricwedge::complex::SimplicialComplex;
use toricwedge::fanprops::{
    is_fan_giving, is_positive, todd_genus, OrientedSphere,
};
use toricwedge::galeview::{
    shephard_criterion, shephard_diagram, svg_diagram, PointConfiguration,
};
use toricwedge::label::VertexLabel;
use toricwedge::liftkit::{lift_charmap, lift_unimodular};
use toricwedge::matrix::{det, Int, IntMat};
use toricwedge::picard3::{
    classify_pentagon_fan, cube_tower_member, heptagon_obstruction_search_with,
    pentagon_family, projectivity_sweep, PentagonFamilySpec,
};
use toricwedge::realcover::{
    dj_count_cube_formula, dj_count_pentagon_formula, enumerate_small_covers,
    FaceInput,
};

const DEFAULT_SEED: u64 = 20240901;

#[derive(Parser)]
#[command(name = "toricwedge", version, about = "Exact wedge calculus toolkit")]
struct Cli {
    /// Number of worker threads for parallel sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wedge a complex at a vertex.
    Wedge {
        /// Complex JSON file.
        input: PathBuf,
        /// Vertex label to wedge at.
        #[arg(long)]
        vertex: String,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Iterated wedge with a multiplicity vector.
    Kofj {
        /// Complex JSON file.
        input: PathBuf,
        /// Comma-separated multiplicities, one per vertex in label order.
        #[arg(long)]
        j: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Project a characteristic matrix away from a face.
    Project {
        /// Complex JSON file.
        #[arg(long)]
        complex: PathBuf,
        /// Characteristic matrix JSON file.
        #[arg(long)]
        matrix: PathBuf,
        /// Vertex labels spanning the face to project away (repeatable).
        #[arg(long = "vertex", required = true)]
        vertices: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a wedge matrix from its two projections.
    Reconstruct {
        /// The base complex JSON file (before wedging).
        #[arg(long)]
        complex: PathBuf,
        /// The wedged vertex's base label.
        #[arg(long)]
        vertex: String,
        /// Projection at the first copy (matrix JSON).
        #[arg(long)]
        first: PathBuf,
        /// Projection at the second copy (matrix JSON).
        #[arg(long)]
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report non-singularity, positivity, Todd genus, and fan-givingness.
    Check {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        /// Also run the Shephard polytopality criterion.
        #[arg(long)]
        projective: bool,
        /// Insist on the Todd genus (errors on GF(2) input).
        #[arg(long)]
        todd: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the Shephard diagram of a ray configuration.
    Shephard {
        /// Integer characteristic matrix JSON file (columns are rays).
        #[arg(long)]
        matrix: PathBuf,
        /// Also run the criterion against this complex.
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Write an SVG rendering of the diagram here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate small covers and compare against closed-form counts.
    Census {
        /// Odd polygon multiplicities for the standard-diagram family.
        #[arg(long, conflicts_with_all = ["cube", "complex"])]
        gale: Option<String>,
        /// Three simplex dimensions for the product-of-simplices family.
        #[arg(long, conflicts_with = "complex")]
        cube: Option<String>,
        /// Arbitrary complex JSON file.
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Coefficient ring (only Z2 is enumerable).
        #[arg(long, default_value = "Z2")]
        ring: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify an integer pentagon matrix as a rotation type.
    ClassifyPentagon {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Search the heptagon obstruction system for integer solutions.
    HeptagonSearch {
        /// Entry bound for the bounded exhaustive search.
        #[arg(long, default_value_t = 10)]
        bound: i64,
        /// Drop an equation (1-based, repeatable) as a negative control.
        #[arg(long = "drop")]
        drops: Vec<usize>,
    },
    /// Check strong polytopality across a parametric family.
    SweepProjectivity {
        /// Family name: `pentagon` or `cube`.
        #[arg(long)]
        family: String,
        /// Bound on the sum of pentagon multiplicities.
        #[arg(long, default_value_t = 6)]
        sum_max: usize,
        /// Bound on |d| and the unknown-vector entries (pentagon family).
        #[arg(long, default_value_t = 1)]
        entry_bound: i64,
        /// Bound on each simplex dimension (cube family).
        #[arg(long, default_value_t = 2)]
        n_max: u32,
        /// Number of random members per shape (cube family).
        #[arg(long, default_value_t = 25)]
        seeds: u64,
        /// Base seed for the random draws.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lift a GF(2) characteristic matrix to an integer one.
    Lift {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lift an odd-determinant integer matrix to determinant one.
    LiftMatrix {
        /// JSON file holding an array of integer rows.
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let s = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    SimplicialComplex::from_json(&s)
        .map_err(|e| anyhow!("parsing {}: {e}", path.display()))
}

fn read_matrix(path: &Path) -> Result<CharMatrix> {
    let s = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    CharMatrix::from_json(&s)
        .map_err(|e| anyhow!("parsing {}: {e}", path.display()))
}

fn parse_label(s: &str) -> Result<VertexLabel> {
    VertexLabel::parse(s).ok_or_else(|| anyhow!("bad vertex label {s:?}"))
}

fn parse_csv<T: std::str::FromStr>(s: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|e| anyhow!("bad list entry {t:?}: {e}"))
        })
        .collect()
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Wedge { input, vertex, output } => {
            let k = read_complex(&input)?;
            let v = parse_label(&vertex)?;
            let w = k.wedge(&v).map_err(|e| anyhow!("{e}"))?;
            emit(output.as_deref(), &w.to_json())?;
            Ok(0)
        }
        Command::Kofj { input, j, output } => {
            let k = read_complex(&input)?;
            let j: Vec<u32> = parse_csv(&j)?;
            let w = k.k_of_j(&j).map_err(|e| anyhow!("{e}"))?;
            emit(output.as_deref(), &w.to_json())?;
            Ok(0)
        }
        Command::Project { complex, matrix, vertices, output } => {
            let k = read_complex(&complex)?;
            let lambda = read_matrix(&matrix)?;
            let sigma: Vec<VertexLabel> = vertices
                .iter()
                .map(|s| parse_label(s))
                .collect::<Result<_>>()?;
            let p = lambda.project(&k, &sigma).map_err(|e| anyhow!("{e}"))?;
            emit(output.as_deref(), &p.to_json())?;
            Ok(0)
        }
        Command::Reconstruct { complex, vertex, first, second, output } => {
            let k = read_complex(&complex)?;
            let v = parse_label(&vertex)?;
            let l1 = read_matrix(&first)?;
            let l2 = read_matrix(&second)?;
            let r = CharMatrix::wedge_reconstruct(&k, &v, &l1, &l2)
                .map_err(|e| anyhow!("{e}"))?;
            emit(output.as_deref(), &r.to_json())?;
            Ok(0)
        }
        Command::Check { complex, matrix, projective, todd, output } => {
            let k = read_complex(&complex)?;
            let lambda = read_matrix(&matrix)?;
            let nonsingular =
                lambda.is_nonsingular(&k).map_err(|e| anyhow!("{e}"))?;
            let mut report = json!({ "nonsingular": nonsingular });
            if lambda.ring() == Ring::Z2 {
                if todd {
                    bail!("the Todd genus is defined for integer matrices only");
                }
                if projective {
                    bail!("the Shephard criterion needs an integer matrix");
                }
            } else {
                let os = OrientedSphere::orient(&k).map_err(|e| anyhow!("{e}"))?;
                let positive =
                    is_positive(&os, &lambda).map_err(|e| anyhow!("{e}"))?;
                let genus =
                    todd_genus(&os, &lambda).map_err(|e| anyhow!("{e}"))?;
                let fan =
                    is_fan_giving(&os, &lambda).map_err(|e| anyhow!("{e}"))?;
                report["positive"] = json!(positive);
                report["todd"] = json!(genus);
                report["fan_giving"] = json!(fan);
                if projective {
                    let rays = PointConfiguration::from_columns(&lambda)
                        .map_err(|e| anyhow!("{e}"))?;
                    let diagram =
                        shephard_diagram(&rays).map_err(|e| anyhow!("{e}"))?;
                    let region = shephard_criterion(&k, &diagram)
                        .map_err(|e| anyhow!("{e}"))?;
                    report["projective"] = json!(region.nonempty);
                    report["witness"] = json!(region
                        .witness
                        .map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
                }
            }
            emit(output.as_deref(), &serde_json::to_string_pretty(&report)?)?;
            Ok(0)
        }
        Command::Shephard { matrix, complex, svg, output } => {
            let lambda = read_matrix(&matrix)?;
            let rays = PointConfiguration::from_columns(&lambda)
                .map_err(|e| anyhow!("{e}"))?;
            let diagram = shephard_diagram(&rays).map_err(|e| anyhow!("{e}"))?;
            let mut findings = false;
            let mut report = json!({ "diagram": serde_json::from_str::<serde_json::Value>(&diagram.to_json())? });
            let mut witness = None;
            if let Some(cpath) = complex {
                let k = read_complex(&cpath)?;
                let region =
                    shephard_criterion(&k, &diagram).map_err(|e| anyhow!("{e}"))?;
                findings = !region.nonempty;
                witness = region.witness.clone();
                report["region"] = json!({
                    "nonempty": region.nonempty,
                    "margin": region.margin.to_string(),
                    "witness": region.witness.map(|w| {
                        w.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                    }),
                });
            }
            if let Some(spath) = svg {
                fs::write(&spath, svg_diagram(&diagram, witness.as_deref()))
                    .with_context(|| format!("writing {}", spath.display()))?;
            }
            emit(output.as_deref(), &serde_json::to_string_pretty(&report)?)?;
            Ok(if findings { 3 } else { 0 })
        }
        Command::Census { gale, cube, complex, ring, output } => {
            if ring != "Z2" {
                bail!("only the GF(2) census is enumerable; pass --ring Z2");
            }
            let (k, formula): (SimplicialComplex, Option<u128>) =
                if let Some(g) = gale {
                    let a: Vec<u32> = parse_csv(&g)?;
                    let k = SimplicialComplex::from_gale(&a)
                        .map_err(|e| anyhow!("{e}"))?;
                    let formula = match a.len() {
                        5 => Some(dj_count_pentagon_formula(&[
                            a[0], a[3], a[1], a[4], a[2],
                        ])),
                        7 => Some(2),
                        _ => None,
                    };
                    (k, formula)
                } else if let Some(c) = cube {
                    let n: Vec<u32> = parse_csv(&c)?;
                    let n: [u32; 3] = n
                        .try_into()
                        .map_err(|_| anyhow!("--cube takes three dimensions"))?;
                    let k = toricwedge::realcover::cube_family_complex(&n)
                        .map_err(|e| anyhow!("{e}"))?;
                    (k, Some(dj_count_cube_formula(&n)))
                } else if let Some(p) = complex {
                    (read_complex(&p)?, None)
                } else {
                    bail!("pass one of --gale, --cube, or --complex");
                };
            let input = FaceInput::from_complex_auto(&k)
                .map_err(|e| anyhow!("{e}"))?;
            let census = enumerate_small_covers(&input);
            let count = census.count();
            let matches = formula.map(|f| f == count as u128);
            let mut report: serde_json::Value =
                serde_json::from_str(&census.to_json())?;
            report["count"] = json!(count);
            if let Some(f) = formula {
                report["formula"] = json!(f.to_string());
                report["formula_match"] = json!(matches.unwrap());
            }
            emit(output.as_deref(), &serde_json::to_string_pretty(&report)?)?;
            let summary = format!(
                "count,{}{}",
                count,
                formula
                    .map(|f| format!(",formula,{f},match,{}", matches.unwrap()))
                    .unwrap_or_default()
            );
            eprintln!("{summary}");
            Ok(if matches == Some(false) { 3 } else { 0 })
        }
        Command::ClassifyPentagon { matrix } => {
            let lambda = read_matrix(&matrix)?;
            let t = classify_pentagon_fan(&lambda).map_err(|e| anyhow!("{e}"))?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "rotation": t.rotation,
                    "d": t.d,
                }))?
            );
            Ok(0)
        }
        Command::HeptagonSearch { bound, drops } => {
            let mut active = [true; 9];
            for d in &drops {
                if *d == 0 || *d > 9 {
                    bail!("--drop takes equation numbers 1..9");
                }
                active[d - 1] = false;
            }
            let solutions = heptagon_obstruction_search_with(bound, active);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "bound": bound,
                    "dropped": drops,
                    "solutions": solutions,
                }))?
            );
            Ok(if solutions.is_empty() { 0 } else { 3 })
        }
        Command::SweepProjectivity {
            family,
            sum_max,
            entry_bound,
            n_max,
            seeds,
            seed,
            output,
        } => {
            let members = match family.as_str() {
                "pentagon" => pentagon_members(sum_max, entry_bound)?,
                "cube" => cube_members(n_max, seeds, seed)?,
                other => bail!("unknown family {other:?}; use pentagon or cube"),
            };
            let report =
                projectivity_sweep(&members).map_err(|e| anyhow!("{e}"))?;
            let body = json!({
                "family": family,
                "seed": seed,
                "total": report.total,
                "non_projective": report.non_projective,
            });
            emit(output.as_deref(), &serde_json::to_string_pretty(&body)?)?;
            Ok(if report.non_projective.is_empty() { 0 } else { 3 })
        }
        Command::Lift { complex, matrix, output } => {
            let k = read_complex(&complex)?;
            let lambda = read_matrix(&matrix)?;
            let cert = lift_charmap(&lambda, &k).map_err(|e| anyhow!("{e}"))?;
            let body = json!({
                "input": serde_json::from_str::<serde_json::Value>(&cert.input.to_json())?,
                "output": serde_json::from_str::<serde_json::Value>(&cert.output.to_json())?,
                "parity_ok": cert.parity_ok,
                "nonsingular": cert.nonsingular,
                "round_trip_ok": cert.round_trip_ok,
                "ok": cert.ok(),
            });
            emit(output.as_deref(), &serde_json::to_string_pretty(&body)?)?;
            Ok(if cert.ok() { 0 } else { 3 })
        }
        Command::LiftMatrix { matrix, output } => {
            let s = fs::read_to_string(&matrix)
                .with_context(|| format!("reading {}", matrix.display()))?;
            let rows: Vec<Vec<i64>> = serde_json::from_str(&s)
                .map_err(|e| anyhow!("parsing {}: {e}", matrix.display()))?;
            let a: IntMat = rows
                .iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect();
            let b = lift_unimodular(&a).map_err(|e| anyhow!("{e}"))?;
            let body = json!({
                "matrix": b
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "det": det(&b).to_string(),
            });
            emit(output.as_deref(), &serde_json::to_string_pretty(&body)?)?;
            Ok(0)
        }
    }
}

/// All pentagon-family members with multiplicity sum at most `sum_max` and
/// parameters bounded by `entry_bound` in absolute value.
fn pentagon_members(
    sum_max: usize,
    entry_bound: i64,
) -> Result<Vec<(SimplicialComplex, CharMatrix)>> {
    let mut members = Vec::new();
    let mut shapes = Vec::new();
    for a1 in 1..=sum_max {
        for a2 in 1..=sum_max {
            for a3 in 1..=sum_max {
                for a4 in 1..=sum_max {
                    for a5 in 1..=sum_max {
                        if a1 + a2 + a3 + a4 + a5 <= sum_max {
                            shapes.push([a1, a2, a3, a4, a5]);
                        }
                    }
                }
            }
        }
    }
    for a in shapes {
        for d in -entry_bound..=entry_bound {
            for n1 in bounded_vectors(a[0], entry_bound) {
                for n4 in bounded_vectors(a[3], entry_bound) {
                    let spec = PentagonFamilySpec {
                        a,
                        d,
                        n1: n1.clone(),
                        n4,
                    };
                    let (k, lambda) =
                        pentagon_family(&spec).map_err(|e| anyhow!("{e}"))?;
                    members.push((k, lambda));
                }
            }
        }
    }
    Ok(members)
}

/// Vectors of the given length with a pinned zero head and the remaining
/// entries ranging over `[-bound, bound]`.
fn bounded_vectors(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64]];
    for _ in 1..len {
        let mut next = Vec::new();
        for v in &out {
            for x in -bound..=bound {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Random tower members over every product-of-simplices shape with factor
/// dimensions in `1..=n_max`, `seeds` draws per shape.
fn cube_members(
    n_max: u32,
    seeds: u64,
    seed: u64,
) -> Result<Vec<(SimplicialComplex, CharMatrix)>> {
    use rand::{Rng, SeedableRng};
    let mut members = Vec::new();
    for n1 in 1..=n_max {
        for n2 in 1..=n_max {
            for n3 in 1..=n_max {
                let n = [n1, n2, n3];
                let free = n1 as usize + (n1 + n2) as usize;
                for s in 0..seeds {
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(
                        seed ^ (u64::from(n1) << 32)
                            ^ (u64::from(n2) << 16)
                            ^ (u64::from(n3) << 8)
                            ^ s,
                    );
                    let params: Vec<i64> =
                        (0..free).map(|_| rng.gen_range(-5..=5)).collect();
                    let (k, lambda) = cube_tower_member(&n, &params)
                        .map_err(|e| anyhow!("{e}"))?;
                    members.push((k, lambda));
                }
            }
        }
    }
    Ok(members)
}
