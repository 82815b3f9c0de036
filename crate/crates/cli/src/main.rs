mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use latmut::cambrian::{build_cambrian, Cambrian, Polygon};
use latmut::coxeter::{build_weak_order, CoxeterType, PermA, PermB};
use latmut::exploration::catalog::{affine_tamari, bad_case_1, bad_case_2};
use latmut::exploration::{
    associahedron_census, census_json, mutation_graph, mutation_graph_to_dot, verify_ordovician_conjectures,
};
use latmut::flip::{ac_correspondence_for_atom, check_mutation, flip, flip_on_atom, reroot, FlipPair};
use latmut::order::{are_isomorphic, canonical_form, poset_from_json, poset_to_dot, poset_to_json};
use latmut::quiver::{all_orientations, CoxeterOrientation, WeightedQuiver};
use latmut::{Lattice, Poset};
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const SPEC_HELP: &str = "\
Spec strings:
  A3:UL        type-A polygon; one U/L letter per label 2..n puts it on the
               upper or lower path (labels 1 and n+1 do not matter)
  A3:LULL      the same with all labels 1..n+1 given
  B3:UL        type-B polygon; letters for labels 1..n-1 (label n is lower)
  orient:A3:RL quiver orientation; letter i is R for i→i+1, L for i←i+1
  weak:A3      weak order of the Coxeter group A3 (or weak:B3)
  FILE         a poset JSON file {\"n\", \"covers\", \"labels\"}

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
LATMUT_STATE_CAP overrides the state caps of breadth-first searches.";

#[derive(Parser)]
#[command(name = "latmut", version, about = "Flips and mutations of finite lattices", after_help = SPEC_HELP)]
struct Cli {
    /// Directory for output files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Cambrian lattice, weak order or poset and write JSON and DOT.
    Build { spec: String },
    /// Flip a poset along a down-set given by its elements.
    Flip {
        file: PathBuf,
        /// Elements of the down-set A, by label or index.
        #[arg(required = true, num_args = 1..)]
        down: Vec<String>,
    },
    /// Flip a lattice at an atom and report whether it is a mutation.
    Mutate {
        file: PathBuf,
        /// The atom, by label or index.
        atom: String,
    },
    /// Flip a connected poset until the given element is its minimum.
    Reroot { file: PathBuf, element: String },
    /// Mutation graph of a lattice up to isomorphism, with per-class checks.
    Explore {
        file: PathBuf,
        /// Coxeter type for reading quivers off the classes.
        #[arg(long = "type", value_enum)]
        ty: Option<TypeArg>,
        /// Maximum number of classes (default LATMUT_STATE_CAP or 10000).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Lattice orientations of the A3 associahedron graph.
    Census,
    /// Print DOT for a poset or quiver JSON file.
    ExportDot { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Flip,
    Coxeter,
    Cambrian,
    Census,
}

/// Usage and input errors exit with 2, failed checks with 1.
enum Failure {
    Usage(String),
    Check(String),
}

type Run = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn check(e: impl ToString) -> Failure {
    Failure::Check(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Build { spec } => cmd_build(&cli.out, spec),
        Command::Flip { file, down } => cmd_flip(&cli.out, file, down),
        Command::Mutate { file, atom } => cmd_mutate(&cli.out, file, atom),
        Command::Reroot { file, element } => cmd_reroot(&cli.out, file, element),
        Command::Explore { file, ty, cap } => {
            let ty = ty.map(|t| match t {
                TypeArg::A => CoxeterType::A,
                TypeArg::B => CoxeterType::B,
            });
            cmd_explore(&cli.out, file, ty, *cap)
        }
        Command::Verify { suite } => {
            if verify::run(*suite, cli.seed) {
                Ok(())
            } else {
                Err(check("verification failed"))
            }
        }
        Command::Census => cmd_census(&cli.out),
        Command::ExportDot { file } => cmd_export_dot(file),
    }
}

fn write(dir: &Path, name: &str, contents: &str) -> Run {
    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn read_poset(file: &Path) -> Result<Poset, Failure> {
    let s = fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    poset_from_json(&s).map_err(|e| usage(format!("{}: {e}", file.display())))
}

fn read_lattice(file: &Path) -> Result<Lattice, Failure> {
    Lattice::new(read_poset(file)?).map_err(|e| usage(format!("{}: not a lattice: {e}", file.display())))
}

fn stem(file: &Path) -> String {
    file.file_stem().map_or_else(|| "poset".to_string(), |s| s.to_string_lossy().into_owned())
}

fn element(p: &Poset, key: &str) -> Result<usize, Failure> {
    p.find(key).ok_or_else(|| usage(format!("no element {key:?}")))
}

fn write_poset(dir: &Path, name: &str, p: &Poset) -> Run {
    write(dir, &format!("{name}.json"), &poset_to_json(p))?;
    write(dir, &format!("{name}.dot"), &poset_to_dot(p, name))
}

fn cmd_build(out: &Path, spec: &str) -> Run {
    let name: String = spec.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    if let Some(rest) = spec.strip_prefix("weak:") {
        let bad = || usage(format!("bad weak order spec {spec:?}"));
        let rank: usize = rest.get(1..).and_then(|r| r.parse().ok()).ok_or_else(bad)?;
        let lattice = match rest.chars().next() {
            Some('A' | 'a') => build_weak_order::<PermA>(rank).map_err(usage)?.lattice().clone(),
            Some('B' | 'b') => build_weak_order::<PermB>(rank).map_err(usage)?.lattice().clone(),
            _ => return Err(bad()),
        };
        println!("{spec}: {} elements", lattice.len());
        return write_poset(out, &name, &lattice);
    }
    let c: Cambrian = if let Some(rest) = spec.strip_prefix("orient:") {
        let o: CoxeterOrientation = rest.parse().map_err(usage)?;
        build_cambrian(&Polygon::from_orientation(&o)).map_err(usage)?
    } else if spec.contains(':') && !Path::new(spec).exists() {
        let p: Polygon = spec.parse().map_err(usage)?;
        build_cambrian(&p).map_err(usage)?
    } else {
        let p = read_poset(Path::new(spec))?;
        println!("{spec}: {} elements, {} covers", p.len(), p.covers().len());
        return write_poset(out, &stem(Path::new(spec)), &p);
    };
    println!("{spec}: {} elements, orientation {}", c.lattice.len(), c.orientation());
    write_poset(out, &name, &c.lattice)?;
    let text: String = c.triangulations.iter().map(|t| format!("{t}\n")).collect();
    write(out, &format!("{name}.triangulations.txt"), &text)
}

fn cmd_flip(out: &Path, file: &Path, down: &[String]) -> Run {
    let p = read_poset(file)?;
    let a = down.iter().map(|k| element(&p, k)).collect::<Result<Vec<_>, _>>()?;
    let pair = FlipPair::new(&p, a).map_err(usage)?;
    let q = flip(&p, &pair);
    let crossing = p.covers().iter().filter(|&&(x, y)| pair.in_a(x) && pair.in_b(y)).count();
    println!("|A| = {}, |B| = {}, {crossing} covers reversed", pair.footwall().len(), pair.hanging_wall().len());
    write_poset(out, &format!("{}.flipped", stem(file)), &q)
}

fn cmd_reroot(out: &Path, file: &Path, key: &str) -> Run {
    let p = read_poset(file)?;
    let x = element(&p, key)?;
    let (q, seq) = reroot(&p, x).map_err(usage)?;
    println!("rerooted at {} after {} flips", p.label(x), seq.len());
    write_poset(out, &format!("{}.rerooted", stem(file)), &q)
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
}

/// Names the Cambrian lattices (A up to rank 4, B up to rank 3) and catalogued
/// lattices isomorphic to `l`.
fn identify(l: &Lattice) -> Vec<String> {
    let mut names = Vec::new();
    let orientations = (1..=4)
        .filter(|&n| catalan(n + 1) == l.len())
        .flat_map(|n| all_orientations(CoxeterType::A, n))
        .chain((2..=3).filter(|&n| binomial(2 * n, n) == l.len()).flat_map(|n| all_orientations(CoxeterType::B, n)));
    for o in orientations {
        if let Ok(c) = build_cambrian(&Polygon::from_orientation(&o)) {
            if are_isomorphic(&c.lattice, l) {
                names.push(format!("cambrian {o}"));
            }
        }
    }
    if l.len() == 14 {
        let f = canonical_form(l);
        for (name, m) in [("affine tamari", affine_tamari()), ("bad case 1", bad_case_1()), ("bad case 2", bad_case_2())] {
            if canonical_form(&m) == f {
                names.push(name.to_string());
            }
            let opposite = canonical_form(&m.dual());
            if opposite == f && opposite != canonical_form(&m) {
                names.push(format!("{name} opposite"));
            }
        }
    }
    names
}

fn cmd_mutate(out: &Path, file: &Path, key: &str) -> Run {
    let l = read_lattice(file)?;
    let a = element(&l, key)?;
    if !l.is_cover(l.bottom(), a) {
        return Err(usage(format!("{key:?} is not an atom")));
    }
    let (q, pair) = flip_on_atom(l.poset(), a).map_err(usage)?;
    let v = check_mutation(&l, &pair, true);
    let ac = ac_correspondence_for_atom(&l, a).map(|c| json!([l.label(c.atom), l.label(c.coatom)]));
    let mut verdict = json!({
        "atom": l.label(a),
        "is_mutation": v.is_mutation,
        "ac": v.ac_ok,
        "ac_pair": ac,
        "d_sublattice": v.d_sublattice_ok,
        "flipped_is_lattice": v.flipped_is_lattice,
    });
    let name = format!("{}.mutated", stem(file));
    write_poset(out, &name, &q)?;
    if let Ok(m) = Lattice::new(q) {
        let note = if are_isomorphic(&l, &m) { "isomorphic to the input" } else { "not isomorphic to the input" };
        verdict["isomorphic_to_input"] = json!(are_isomorphic(&l, &m));
        verdict["identified_as"] = json!(identify(&m));
        println!("mutation at {}: {note}; identified as {:?}", l.label(a), identify(&m));
    } else {
        println!("flip at {} is not a lattice", l.label(a));
    }
    let text = serde_json::to_string_pretty(&verdict).expect("json value");
    write(out, &format!("{name}.verdict.json"), &text)
}

fn default_cap() -> usize {
    std::env::var("LATMUT_STATE_CAP").ok().and_then(|v| v.parse().ok()).unwrap_or(10_000)
}

fn cmd_explore(out: &Path, file: &Path, ty: Option<CoxeterType>, cap: Option<usize>) -> Run {
    let l = read_lattice(file)?;
    let g = mutation_graph(&l, cap.unwrap_or_else(default_cap)).map_err(check)?;
    let r = verify_ordovician_conjectures(&g, ty);
    let classes: Vec<_> = r
        .classes
        .iter()
        .map(|c| {
            json!({
                "class": c.class,
                "size": c.size,
                "canonical": g.forms[c.class].to_string(),
                "identified_as": identify(&g.representatives[c.class]),
                "locally_mutable": c.locally_mutable,
                "polygonal": c.polygonal,
                "regular_degree": c.regular_degree,
                "u_bijective": c.u_bijective,
                "semidistributive": c.semidistributive,
                "quiver_commutes": c.quiver_commutes,
            })
        })
        .collect();
    let edges: Vec<_> = g
        .edges
        .iter()
        .map(|e| json!({"from": e.from, "to": e.to, "atom": g.representatives[e.from].label(e.atom)}))
        .collect();
    let report = json!({
        "classes": classes,
        "edges": edges,
        "non_lattice_flips": g.non_lattice_flips.len(),
        "reversible": r.reversible,
        "all_pass": r.all_pass(),
    });
    let name = format!("{}.mutation_graph", stem(file));
    write(out, &format!("{name}.json"), &serde_json::to_string_pretty(&report).expect("json value"))?;
    write(out, &format!("{name}.dot"), &mutation_graph_to_dot(&g, ty))?;
    println!("{} classes, {} edges", g.len(), g.edges.len());
    if r.all_pass() {
        println!("every class is locally mutable, polygonal, regular and semidistributive");
        Ok(())
    } else {
        Err(check("some class fails a check; see the JSON report"))
    }
}

fn cmd_census(out: &Path) -> Run {
    let r = associahedron_census().map_err(check)?;
    println!(
        "{} of {} orientations are lattices, in {} classes",
        r.lattice_orientations,
        r.orientations_examined,
        r.classes.len()
    );
    for c in &r.classes {
        println!("  {:>3} orientations  {}", c.orientations, c.classification);
    }
    write(out, "census.json", &census_json(&r))
}

fn cmd_export_dot(file: &Path) -> Run {
    let s = fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let name = stem(file);
    let dot = if s.contains("\"weights\"") {
        WeightedQuiver::from_json(&s).map_err(usage)?.to_dot(&name)
    } else {
        poset_to_dot(&poset_from_json(&s).map_err(usage)?, &name)
    };
    print!("{dot}");
    Ok(())
}
