//! Command-line front end for the lattice-triangles library.
//!
//! Exit codes: 0 success/verified, 1 mathematical violation found,
//! 2 invalid input, 3 negative membership answer.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lattice_triangles::cones::ConeIndex;
use lattice_triangles::lattice::{
    brute_force_bi, dilated_point_count, ehrhart_eval, hnf_normalize, pick_area_twice, BiPair,
    LatticeTriangle,
};
use lattice_triangles::plot::{render_pairs_svg, write_pairs_csv, SvgOptions};
use lattice_triangles::realize::{
    apex_witness, enumerate_pairs_sharded, lower_facet_witness, membership_witness,
    prime_line_expected, prime_line_pairs, upper_face_witness, verify_cone_emptiness_sharded,
    Witness,
};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_NOT_MEMBER: u8 = 3;

#[derive(Parser)]
#[command(name = "lattice-triangles", version, about = "Exact (b, i) pair data of plane lattice triangles", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all realizable (b, i) pairs with 2i + b - 2 <= n-max
    Pairs(PairsArgs),
    /// Decide whether (b, i) is realized by some lattice triangle
    Member {
        /// Boundary lattice point count, at least 3
        b: i64,
        /// Interior lattice point count, at least 0
        i: i64,
    },
    /// Verify that the open cones hold no realizable pair up to b-max
    CheckCones(CheckConesArgs),
    /// Construct a witness triangle from one of the named families
    Witness {
        #[command(subcommand)]
        family: WitnessFamily,
    },
    /// Check that each odd prime volume line carries exactly two pairs
    PrimeLine {
        /// Largest prime to test (vacuous below 3)
        #[arg(long)]
        p_max: i64,
    },
    /// Ehrhart data of the triangle with the given vertices
    Ehrhart(EhrhartArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Parser)]
struct PairsArgs {
    /// Window bound on the normalized volume n = 2i + b - 2. The default
    /// 1498 makes the set complete on the window b <= 500, i <= 500.
    #[arg(long, default_value_t = 1498)]
    n_max: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Crop the SVG window to b <= B_MAX (and the i range the enumeration
    /// is complete on); ignored for csv/json
    #[arg(long)]
    b_max: Option<i64>,
    /// Overlay the facet lines of cones A..B on the SVG
    #[arg(long, value_parser = parse_range)]
    cones: Option<(i64, i64)>,
    /// Worker threads; the output is identical for any shard count
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct CheckConesArgs {
    /// Window bound on the boundary count
    #[arg(long)]
    b_max: i64,
    /// Inclusive cone index range A..B with A >= 2
    #[arg(long, value_parser = parse_range)]
    c: (i64, i64),
    /// Worker threads per cone
    #[arg(long, default_value_t = 1)]
    shards: usize,
}

#[derive(Subcommand)]
enum WitnessFamily {
    /// The apex pair (2c^2 + 2c + 2, c^3 - c) of cone c
    Apex {
        #[arg(long)]
        c: i64,
    },
    /// An integer point (b, i) on the lower facet of the closure of cone c
    Lower {
        #[arg(long)]
        c: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        i: i64,
    },
    /// The upper-face point of cone c with parameter k >= 2c + 1
    Upper {
        #[arg(long)]
        c: i64,
        #[arg(long)]
        k: i64,
    },
}

#[derive(Parser)]
struct EhrhartArgs {
    /// First vertex as x,y
    #[arg(value_parser = parse_point, allow_hyphen_values = true)]
    v1: (i64, i64),
    /// Second vertex as x,y
    #[arg(value_parser = parse_point, allow_hyphen_values = true)]
    v2: (i64, i64),
    /// Third vertex as x,y
    #[arg(value_parser = parse_point, allow_hyphen_values = true)]
    v3: (i64, i64),
    /// Evaluate the polynomial for k = 0..=k-max
    #[arg(long, default_value_t = 4)]
    k_max: i64,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range like 2..10, got {s:?}"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad range start {lo:?}: {e}"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad range end {hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_point(s: &str) -> Result<(i64, i64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a vertex like 3,0, got {s:?}"))?;
    let x: i64 = x
        .trim()
        .parse()
        .map_err(|e| format!("bad x coordinate {x:?}: {e}"))?;
    let y: i64 = y
        .trim()
        .parse()
        .map_err(|e| format!("bad y coordinate {y:?}: {e}"))?;
    Ok((x, y))
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Pairs(args) => cmd_pairs(args),
        Command::Member { b, i } => cmd_member(b, i),
        Command::CheckCones(args) => cmd_check_cones(args),
        Command::Witness { family } => cmd_witness(family),
        Command::PrimeLine { p_max } => cmd_prime_line(p_max),
        Command::Ehrhart(args) => cmd_ehrhart(args),
    }
}

fn invalid(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_INVALID
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> u8 {
    let result = match out {
        Some(path) => fs::write(path, bytes),
        None => io::stdout().write_all(bytes),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => invalid(format_args!(
            "cannot write {}: {e}",
            out.as_deref()
                .map_or("<stdout>".into(), |p| p.display().to_string())
        )),
    }
}

fn cmd_pairs(args: PairsArgs) -> u8 {
    if args.shards == 0 {
        return invalid("--shards must be at least 1");
    }
    let set = match enumerate_pairs_sharded(args.n_max, args.shards) {
        Ok(set) => set,
        Err(e) => return invalid(e),
    };
    let bytes = match args.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_pairs_csv(&mut buf, &set).expect("writing to a Vec cannot fail");
            buf
        }
        Format::Json => {
            let pairs: Vec<[i64; 2]> = set.iter().map(|p| [p.boundary, p.interior]).collect();
            let doc = json!({
                "n_max": set.n_max(),
                "count": pairs.len(),
                "pairs": pairs,
            });
            let mut buf = doc.to_string().into_bytes();
            buf.push(b'\n');
            buf
        }
        Format::Svg => {
            let options = SvgOptions {
                b_crop: args.b_max,
                cones: args.cones,
            };
            render_pairs_svg(&set, &options).into_bytes()
        }
    };
    emit(&args.out, &bytes)
}

fn witness_json(w: &Witness) -> serde_json::Value {
    let t = w.triple();
    json!({ "A": t.base(), "B": t.shear(), "C": t.height() })
}

fn cmd_member(b: i64, i: i64) -> u8 {
    let pair = BiPair::new(b, i);
    match membership_witness(pair) {
        Err(e) => invalid(e),
        Ok(None) => {
            println!("{}", json!({ "b": b, "i": i, "member": false }));
            EXIT_NOT_MEMBER
        }
        Ok(Some(w)) => {
            debug_assert!(w.verified_by_scan());
            println!(
                "{}",
                json!({ "b": b, "i": i, "member": true, "witness": witness_json(&w) })
            );
            EXIT_OK
        }
    }
}

fn cmd_check_cones(args: CheckConesArgs) -> u8 {
    let (c_min, c_max) = args.c;
    if c_min < 2 {
        return invalid(format_args!("cone range must start at 2, got {c_min}"));
    }
    if args.shards == 0 {
        return invalid("--shards must be at least 1");
    }
    let reports = match verify_cone_emptiness_sharded(args.b_max, c_min, c_max, args.shards) {
        Ok(reports) => reports,
        Err(e) => return invalid(e),
    };
    let mut total_violations = 0;
    for report in &reports {
        println!(
            "c={}: {} candidates, {} violations",
            report.cone,
            report.candidates,
            report.violations.len()
        );
        for w in &report.violations {
            println!("  violation: {w}");
        }
        total_violations += report.violations.len();
    }
    println!(
        "total: {} violations across {} cones (b <= {})",
        total_violations,
        reports.len(),
        args.b_max
    );
    if total_violations == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn cmd_witness(family: WitnessFamily) -> u8 {
    let (name, witness) = match family {
        WitnessFamily::Apex { c } => match ConeIndex::new(c) {
            Ok(c) => ("apex", Ok(apex_witness(c))),
            Err(e) => return invalid(e),
        },
        WitnessFamily::Lower { c, b, i } => match ConeIndex::new(c) {
            Ok(c) => ("lower", lower_facet_witness(BiPair::new(b, i), c)),
            Err(e) => return invalid(e),
        },
        WitnessFamily::Upper { c, k } => match ConeIndex::new(c) {
            Ok(c) => ("upper", upper_face_witness(c, k)),
            Err(e) => return invalid(e),
        },
    };
    let witness = match witness {
        Ok(w) => w,
        Err(e) => return invalid(e),
    };
    if !witness.verified_by_scan() {
        eprintln!("error: witness {witness} failed scan validation");
        return EXIT_VIOLATION;
    }
    let vertices: Vec<[i64; 2]> = witness.vertices().iter().map(|v| [v.x, v.y]).collect();
    println!(
        "{}",
        json!({
            "family": name,
            "pair": { "b": witness.pair().boundary, "i": witness.pair().interior },
            "vertices": vertices,
            "triple": witness_json(&witness),
        })
    );
    EXIT_OK
}

fn cmd_prime_line(p_max: i64) -> u8 {
    let mut checked = 0;
    let mut mismatches = 0;
    for p in 3..=p_max.max(2) {
        let set = match prime_line_pairs(p) {
            Ok(set) => set,
            Err(_) => continue, // not an odd prime
        };
        checked += 1;
        let expected = prime_line_expected(p);
        if set.pairs() == expected {
            println!("p={p}: {} {} ok", expected[0], expected[1]);
        } else {
            mismatches += 1;
            let got: Vec<String> = set.iter().map(|q| q.to_string()).collect();
            println!("p={p}: MISMATCH got {{{}}}", got.join(", "));
        }
    }
    println!("checked {checked} odd primes up to {p_max}: {mismatches} mismatches");
    if mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn cmd_ehrhart(args: EhrhartArgs) -> u8 {
    if args.k_max < 0 {
        return invalid("--k-max must be non-negative");
    }
    let triangle = match LatticeTriangle::from_coords([args.v1, args.v2, args.v3]) {
        Ok(t) => t,
        Err(e) => return invalid(e),
    };
    let pair = brute_force_bi(&triangle);
    let hnf = hnf_normalize(&triangle);
    println!(
        "b={} i={} 2a={} hnf={}",
        pair.boundary,
        pair.interior,
        pick_area_twice(pair),
        hnf
    );
    let mut mismatches = 0;
    for k in 0..=args.k_max {
        let from_formula = ehrhart_eval(pair, k);
        let from_scan = dilated_point_count(&triangle, k);
        let verdict = if from_formula == from_scan {
            "ok"
        } else {
            mismatches += 1;
            "MISMATCH"
        };
        println!("k={k} ehrhart={from_formula} scan={from_scan} {verdict}");
    }
    if mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}
