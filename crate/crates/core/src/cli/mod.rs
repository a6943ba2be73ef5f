//! The `hgx` command line: `check`, `certify-galois`, `certify-qpb` and
//! `corpus`, with text or JSON reports.

pub mod elaborate;
pub mod report;
pub mod syntax;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::comodule::Coaction;
use crate::corpus;
use crate::exactfield::Gaussian;
use crate::galois::{antipode_from_can, canonical_map, certify_quantum_principal_bundle, check_exact, check_free, GaloisCertificate, GaloisError};
use crate::hopfcore::{HopfStructure, Level};
use crate::verdict::Verdict;

use elaborate::{load_str, parse_gaussian, Env};
use report::{color_from_env, CheckRecord, Report, Truncation};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hgx", version, about = "Certify Hopf algebras, comodule algebras and Hopf-Galois extensions")]
struct Cli {
    /// Truncation degree.
    #[arg(long, global = true, default_value_t = 4)]
    degree: usize,
    /// Extra length allowed for preimages.
    #[arg(long, global = true, default_value_t = 2)]
    slack: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Specialize q to a Gaussian rational, e.g. `2` or `1/2 + i`.
    #[arg(long, global = true)]
    q: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Coalgebra => Level::Coalgebra,
            LevelArg::Bialgebra => Level::Bialgebra,
            LevelArg::Hopf => Level::Hopf,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Axiom checks for every block of a file.
    Check {
        file: PathBuf,
        /// Level to check every structure at; defaults to what each declares.
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
    },
    /// Canonical map, freeness and exactness of a coaction.
    CertifyGalois {
        file: PathBuf,
        #[arg(long)]
        coaction: Option<String>,
    },
    /// Quantum principal bundle certificate for a quantum subgroup.
    CertifyQpb {
        file: PathBuf,
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Run the built-in corpus against its expected results.
    Corpus {
        #[arg(long, conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        /// Write every entry as `<name>.hgx` into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Runs `hgx` with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(mut r) => {
            r.finish(start.elapsed().as_millis() as u64);
            let text = match cli.report {
                Format::Json => r.json() + "\n",
                Format::Text => r.text(color_from_env()),
            };
            let _ = out.write_all(text.as_bytes());
            if r.pass() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "hgx: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, Usage> {
    let trunc = Truncation { degree: cli.degree, slack: cli.slack };
    let q = cli.q.as_deref().map(parse_gaussian).transpose()?;
    let q_label = q.as_ref().map(|g| g.to_string());
    match &cli.command {
        Command::Check { file, level } => {
            let (src, env) = load_file(file, q.as_ref())?;
            let mut r = Report::new("check", src.as_bytes(), trunc, q_label);
            check(&env, trunc, level.map(Level::from), &mut r);
            Ok(r)
        }
        Command::CertifyGalois { file, coaction } => {
            let (src, env) = load_file(file, q.as_ref())?;
            let name = pick(env.coactions.keys(), coaction.as_deref(), "coaction")?;
            let mut r = Report::new("certify-galois", src.as_bytes(), trunc, q_label);
            certify_galois(env.coaction(&name).expect("picked"), trunc, &mut r)?;
            Ok(r)
        }
        Command::CertifyQpb { file, subgroup } => {
            let (src, env) = load_file(file, q.as_ref())?;
            let name = pick(env.subgroups.keys(), subgroup.as_deref(), "subgroup")?;
            let mut r = Report::new("certify-qpb", src.as_bytes(), trunc, q_label);
            certify_qpb(&env, &name, trunc, &mut r)?;
            Ok(r)
        }
        Command::Corpus { name, all, export } => {
            if q.is_some() {
                return Err(Usage("--q does not apply to the corpus".into()));
            }
            let selected: Vec<&corpus::CorpusEntry> = match (name, all) {
                (Some(n), _) => vec![corpus::entry(n)?],
                (None, true) => corpus::entries().iter().collect(),
                (None, false) if export.is_some() => Vec::new(),
                (None, false) => return Err(Usage("corpus needs --name NAME or --all".into())),
            };
            let digest_input: String = selected.iter().map(|e| e.source).collect();
            let mut r = Report::new("corpus", digest_input.as_bytes(), trunc, None);
            run_corpus(&selected, &mut r)?;
            if let Some(dir) = export {
                let files = corpus::export(dir)?;
                r.note(format!("exported {} entries to {}", files.len(), dir.display()));
            }
            Ok(r)
        }
    }
}

fn load_file(path: &PathBuf, q: Option<&Gaussian>) -> Result<(String, Env), Usage> {
    let src = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let env = load_str(&src, q).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    Ok((src, env))
}

fn pick<'a>(mut names: impl Iterator<Item = &'a String>, wanted: Option<&str>, what: &str) -> Result<String, Usage> {
    let all: Vec<&String> = names.by_ref().collect();
    match wanted {
        Some(w) if all.iter().any(|n| *n == w) => Ok(w.to_string()),
        Some(w) => Err(Usage(format!("no {what} named `{w}`"))),
        None if all.len() == 1 => Ok(all[0].clone()),
        None if all.is_empty() => Err(Usage(format!("the file declares no {what}"))),
        None => Err(Usage(format!(
            "several {what}s declared ({}); choose one with --{what}",
            all.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn prefixed(prefix: &str, vs: impl IntoIterator<Item = Verdict>) -> Vec<Verdict> {
    vs.into_iter()
        .map(|v| {
            let name = format!("{prefix}/{}", v.name);
            v.renamed(name)
        })
        .collect()
}

fn check(env: &Env, t: Truncation, level: Option<Level>, r: &mut Report) {
    for (n, p) in &env.algebras {
        let amb = p.check_local_confluence(t.degree.max(2));
        let w = amb.first().map(|a| format!("overlap {}", p.fmt_word(&a.word)));
        r.push(Verdict::from_witness(format!("{n}/confluence"), w));
    }
    for (n, h) in &env.structures {
        let want = level.unwrap_or(h.level());
        r.extend(prefixed(n, structure_checks(h, want, t)));
    }
    for (n, c) in &env.coactions {
        r.extend(prefixed(n, c.check_coaction(t.degree)));
    }
    for (n, s) in &env.subgroups {
        let w = s.map.validate_bialgebra_map(&s.h, &s.hp).err().map(|e| e.to_string());
        r.push(Verdict::from_witness(format!("{n}/bialgebra-map"), w));
    }
    for (n, p) in &env.pairings {
        r.extend(prefixed(n, p.check_duality(t.degree)));
        if p.is_finite() {
            r.push(p.check_nondegenerate().renamed(format!("{n}/nondegenerate")));
        }
    }
}

fn structure_checks(h: &HopfStructure, want: Level, t: Truncation) -> Vec<Verdict> {
    let declared = h.level();
    if want <= declared {
        return h.check_level(t.degree, want);
    }
    if declared < Level::Bialgebra {
        let mut out = h.check_level(t.degree, declared);
        out.push(Verdict::fail("bialgebra", "no multiplication declared"));
        return out;
    }
    let mut out = h.check_level(t.degree, Level::Bialgebra);
    let v = match antipode_from_can(h, t.degree, t.slack) {
        Ok(s) => s.verdict.renamed("antipode-from-can"),
        Err(GaloisError::NoAntipode(w)) => {
            Verdict::fail("antipode-from-can", "no antipode certified at this truncation").with_detail(w)
        }
        Err(e) => Verdict::fail("antipode-from-can", e.to_string()),
    };
    out.push(v);
    out
}

fn galois_notes(cert: &GaloisCertificate, b_dim: usize, r: &mut Report) {
    let c = &cert.coaction;
    r.note(format!("coinvariants: dim {b_dim}"));
    for x in &cert.b_basis {
        r.note(format!("  {}", c.pres().fmt_poly(x)));
    }
    r.note(format!(
        "balanced source dim {}, target dim {}, rank {}{}",
        cert.source_dim(),
        cert.target_dim,
        cert.rank,
        if cert.exact { ", exact" } else { ", truncated" }
    ));
    for (h, x) in cert.translation_table() {
        r.note(format!("tau({}) = {}", c.hopf().fmt_word(h), cert.fmt_coords(x)));
    }
}

fn certify_galois(c: &Coaction, t: Truncation, r: &mut Report) -> Result<(), Usage> {
    let n = c.name().to_string();
    let b = c.coinvariants(c.pres().max_normal_len().unwrap_or(t.degree));
    let cert = canonical_map(c, &b, t.degree, t.slack)?;
    r.extend(prefixed(&n, c.check_coaction(t.degree)));
    r.extend(prefixed(&n, cert.verdicts()));
    let hg = cert
        .well_defined
        .clone()
        .and(cert.injective.clone())
        .and(cert.surjective.clone())
        .renamed("hopf-galois");
    r.extend(prefixed(&n, [hg, check_free(c, t.degree, t.slack), check_exact(c, &b, t.degree, t.slack).verdict]));
    galois_notes(&cert, b.dim(), r);
    Ok(())
}

fn certify_qpb(env: &Env, name: &str, t: Truncation, r: &mut Report) -> Result<(), Usage> {
    let s = env.subgroup(name).expect("picked");
    let w = s.map.validate_bialgebra_map(&s.h, &s.hp).err().map(|e| e.to_string());
    r.push(Verdict::from_witness(format!("{name}/bialgebra-map"), w));
    let q = certify_quantum_principal_bundle(&s.h, &s.hp, &s.map, t.degree, t.slack)?;
    r.extend(prefixed(name, q.certificate.verdicts()));
    r.extend(prefixed(name, q.verdicts()));
    let pass = q.pass();
    r.push(Verdict::from_witness(
        format!("{name}/quantum-principal-bundle"),
        (!pass).then(|| "free, exact and Hopf-Galois do not all hold".to_string()),
    ));
    galois_notes(&q.certificate, q.coinvariants.dim(), r);
    Ok(())
}

fn run_corpus(selected: &[&corpus::CorpusEntry], r: &mut Report) -> Result<(), Usage> {
    let results: Vec<Result<Vec<corpus::Outcome>, corpus::CorpusError>> = std::thread::scope(|s| {
        let handles: Vec<_> = selected.iter().map(|e| s.spawn(move || corpus::run_expected(e.name))).collect();
        handles.into_iter().map(|h| h.join().expect("corpus worker")).collect()
    });
    for res in results {
        for o in res? {
            let params = if o.params.is_empty() { String::new() } else { format!(" [{}]", o.params) };
            let provenance = match &o.provenance {
                corpus::Provenance::Published(q) => format!("published: {q}"),
                corpus::Provenance::Immediate => "immediate".into(),
                corpus::Provenance::Computed => "computed".into(),
            };
            r.checks.push(CheckRecord {
                name: format!("{}/{}{params}", o.entry, o.check),
                verdict: if o.matched { "pass" } else { "fail" },
                witness: (!o.matched).then(|| format!("expected {}, observed {}", o.expected, o.observed)),
                detail: None,
                provenance: Some(provenance),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
