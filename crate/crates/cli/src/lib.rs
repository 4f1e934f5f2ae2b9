//! `qcoh` command-line front end.
//!
//! [`run`] takes the full argument vector, appends the report to `out` and
//! returns the process exit code. Diagnostics go to standard error.

mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use qcoh::error::Error;
use qcoh::qalgebra::{order2_nilpotent_obstruction, ObstructionPath, Schedule, Verdict};
use qcoh::rings::{
    adjoint_catalog, coadjoint_ring, cominuscule_catalog, complete_intersection,
    fiber_dimension_check, grassmannian2, load_ring, projective_space, save_ring, Provenance,
    RingTable,
};
use qcoh::verify::{run_suite, Suite, Tables};

pub use report::{analyze_fields, Field};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DATA: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "qcoh", version, about = "Exact small quantum cohomology rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the variety catalogs and check the fiber dimension identity.
    Catalog,
    /// Construct a ring and write it as a table file.
    Build {
        /// pn:<n>, ci:<n>:<d1,..,dr>, gr2:<n> or coadj:<Cn|F4>.
        #[arg(long)]
        variety: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Radical, semisimplicity, the form on A_0 and the E_h report.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// First-order obstruction in the direction of a class.
    Deform {
        file: PathBuf,
        /// Class label: `pt`, `h`, `1` or an explicit `s:a1+2a2` root label.
        #[arg(long)]
        tau: String,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Replace a bundled table, as `name=path` with name in ig26, ig28, f4p4.
        #[arg(long = "table", value_name = "NAME=PATH")]
        tables: Vec<String>,
    },
}

/// Failure of a command, with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn file(path: &std::path::Path, e: Error) -> Self {
        Self {
            code: EXIT_DATA,
            message: format!("{}: {e}", path.display()),
        }
    }

    fn data(e: Error) -> Self {
        Self {
            code: EXIT_DATA,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

pub fn run(argv: &[String], out: &mut String) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                out.push_str(&e.render().to_string());
                return EXIT_OK;
            }
            eprint!("{}", e.render());
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Catalog => catalog(out),
        Command::Build { variety, output } => build(&variety, &output, out),
        Command::Analyze { file, json } => analyze(&file, json, out),
        Command::Deform { file, tau } => deform(&file, &tau, out),
        Command::Verify { suite, tables } => verify(&suite, &tables, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("qcoh: {}", f.message);
            f.code
        }
    }
}

fn catalog(out: &mut String) -> CmdResult {
    out.push_str("# cominuscule\n");
    for v in cominuscule_catalog() {
        out.push_str(&format!(
            "{} type={} dim={} c1={} dim_gamma2={} fiber={}\n",
            v.name,
            v.root_type,
            v.dim,
            v.c1(),
            v.dim_gamma2.map_or("-".into(), |g| g.to_string()),
            v.fiber.map_or("-".into(), |f| f.to_string()),
        ));
    }
    out.push_str("# adjoint\n");
    let mut ok = true;
    for v in adjoint_catalog() {
        let identity = v.dim == 2 * v.c1() - 1;
        let expected = !v.root_type.starts_with('C');
        ok &= identity == expected;
        let index: Vec<String> = v.index.iter().map(|i| i.to_string()).collect();
        out.push_str(&format!(
            "{} type={} dim={} c1={} dim=2c1-1:{identity}\n",
            v.name,
            v.root_type,
            v.dim,
            index.join(","),
        ));
    }
    out.push_str("# dim F = 2(c1 - dim Gamma2)\n");
    for c in fiber_dimension_check() {
        ok &= c.holds();
        out.push_str(&format!(
            "{} F={} dim F={} expected={} {}\n",
            c.variety,
            c.fiber,
            c.dim_fiber,
            c.expected,
            if c.holds() { "ok" } else { "FAIL" }
        ));
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn parse_usize(s: &str, what: &str) -> Result<usize, Failure> {
    s.parse()
        .map_err(|_| Failure::usage(format!("invalid {what} {s:?}")))
}

/// Parse a `--variety` spec and construct the ring.
fn construct(spec: &str) -> Result<RingTable, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let data = |r: qcoh::error::Result<_>| r.map_err(Failure::data);
    match parts.as_slice() {
        ["pn", n] => Ok(RingTable::builtin(data(projective_space(parse_usize(
            n, "n",
        )?))?)),
        ["ci", n, ds] => {
            let degrees = ds
                .split(',')
                .map(|d| {
                    d.parse::<u32>()
                        .map_err(|_| Failure::usage(format!("invalid degree {d:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RingTable::builtin(data(complete_intersection(
                parse_usize(n, "n")?,
                &degrees,
            ))?))
        }
        ["gr2", n] => Ok(RingTable::builtin(data(grassmannian2(parse_usize(
            n, "n",
        )?))?)),
        ["coadj", t] => {
            let t = t
                .parse()
                .map_err(|e: Error| Failure::usage(e.to_string()))?;
            Ok(RingTable::new(
                data(coadjoint_ring(t))?,
                Provenance::Completed,
            ))
        }
        _ => Err(Failure::usage(format!(
            "unknown variety {spec:?}; expected pn:<n>, ci:<n>:<d1,..>, gr2:<n> or coadj:<type>"
        ))),
    }
}

fn build(spec: &str, output: &PathBuf, out: &mut String) -> CmdResult {
    let t = construct(spec)?;
    save_ring(&t, output).map_err(|e| Failure::file(output, e))?;
    out.push_str(&format!(
        "wrote {} ({} classes, c1 {}, {}) to {}\n",
        t.ring.name(),
        t.ring.dim(),
        t.ring.c1(),
        t.provenance,
        output.display()
    ));
    Ok(EXIT_OK)
}

fn analyze(file: &PathBuf, json: bool, out: &mut String) -> CmdResult {
    let t = load_ring(file).map_err(|e| Failure::file(file, e))?;
    let fields = analyze_fields(&t).map_err(Failure::data)?;
    if json {
        let obj: serde_json::Map<String, serde_json::Value> = fields
            .iter()
            .map(|f| (f.key.to_string(), f.value.clone()))
            .collect();
        let text = serde_json::to_string_pretty(&serde_json::Value::Object(obj))
            .map_err(|e| Failure::data(Error::Internal(e.to_string())))?;
        out.push_str(&text);
        out.push('\n');
    } else {
        out.push_str(&report::summary_line(&t, &fields));
        out.push('\n');
        for f in &fields {
            out.push_str(&format!("{}: {}\n", f.key, f.render()));
        }
    }
    Ok(EXIT_OK)
}

fn deform(file: &PathBuf, tau: &str, out: &mut String) -> CmdResult {
    let t = load_ring(file).map_err(|e| Failure::file(file, e))?;
    let r = &t.ring;
    let tau_index = r.index_of(tau).map_err(|e| Failure::usage(e.to_string()))?;
    let schedule = Schedule::for_direction(r, tau_index);
    let v = order2_nilpotent_obstruction(r, &schedule).map_err(Failure::data)?;
    let headline = match (v.verdict, v.path) {
        (Verdict::Obstructed, ObstructionPath::SingleInvariant) => format!(
            "OBSTRUCTED: 4-point candidate {} ∉ ℤ≥0",
            v.candidate.as_ref().map_or("-".into(), |c| c.to_string())
        ),
        (Verdict::Obstructed, ObstructionPath::Congruence) => {
            "OBSTRUCTED: π(W)/λ² outside the integer span of the 4-point monomials".to_string()
        }
        (verdict, _) => format!(
            "{}: {}",
            verdict.as_str(),
            v.reason.as_deref().unwrap_or("no contradiction found")
        ),
    };
    out.push_str(&headline);
    out.push('\n');
    let show = |q: &Option<qcoh::Q>| q.as_ref().map_or("-".to_string(), |x| x.to_string());
    out.push_str(&format!("ring: {}\n", r.name()));
    out.push_str(&format!("tau: {} ({})\n", r.label(tau_index), tau));
    out.push_str(&format!("path: {:?}\n", v.path));
    out.push_str(&format!("lambda: {}\n", show(&v.lambda)));
    out.push_str(&format!("candidate: {}\n", show(&v.candidate)));
    if let Some(b) = v.in_lattice {
        out.push_str(&format!("in lattice: {b}\n"));
    }
    if !v.projected_w.is_empty() {
        let w: Vec<String> = v.projected_w.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("projected W: [{}]\n", w.join(", ")));
    }
    for l in &v.log {
        out.push_str(&format!("  {l}\n"));
    }
    Ok(EXIT_OK)
}

fn verify(suite: &str, overrides: &[String], out: &mut String) -> CmdResult {
    let suite: Suite = suite
        .parse()
        .map_err(|e: Error| Failure::usage(e.to_string()))?;
    let mut tables = Tables::bundled().map_err(Failure::data)?;
    for o in overrides {
        let (name, path) = o
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("expected NAME=PATH, got {o:?}")))?;
        let t = load_ring(path).map_err(|e| Failure::file(path.as_ref(), e))?;
        match name {
            "ig26" => tables.ig26 = Some(t),
            "ig28" => tables.ig28 = Some(t),
            "f4p4" => tables.f4p4 = Some(t),
            _ => return Err(Failure::usage(format!("unknown table {name:?}"))),
        }
    }
    let report = run_suite(suite, &tables);
    out.push_str(&report.to_text());
    Ok(if report.ok() { EXIT_OK } else { EXIT_FAIL })
}
