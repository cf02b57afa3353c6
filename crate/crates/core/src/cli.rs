//! The command-line driver. Exit codes: 0 pass, 1 mathematical negative
//! (outside a cone, a failed property, a conjecture violation), 2 usage,
//! format or I/O errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{membership, MembershipCertificate};
use crate::closure::{published_ray_count, verify_all, ConeSet, Status};
use crate::cone::{cached_bprime5, cone_rays};
use crate::count::count_vector;
use crate::error::{Error, Result};
use crate::format::{
    cone_to_string, read_cone, read_graph, read_vector, vector_to_string, write_graph,
};
use crate::search::{run_search, SearchConfig};

#[derive(Debug, Parser)]
#[command(
    name = "coloring-cones",
    version,
    about = "Coloring count cones of plane near-cubic graphs"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Computes the rays of B_d and prints their number.
    Rays {
        #[arg(long)]
        d: usize,
        /// Cone file to write.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Counts the 3-edge-colorings of a graph file per precoloring.
    Count {
        #[arg(long)]
        graph: PathBuf,
        /// Vector file to write (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decides whether a vector lies in a cone, with a certificate.
    Member {
        #[arg(long)]
        vector: PathBuf,
        #[arg(long)]
        cone: PathBuf,
    },
    /// Checks the d = 5 conjecture on random plane graphs.
    Search {
        #[arg(long, default_value_t = 5)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 24)]
        max_vertices: usize,
        /// Directory for reproducer graph files of violations.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Runs the closure battery (a)-(i) over the cones K_2..K_8.
    VerifyLemma {
        /// Directory of `*.cone` files; without it K_2..K_5 are regenerated.
        #[arg(long)]
        cone_dir: Option<PathBuf>,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &mut buf)),
            Err(e) => Err(Error::Input(e.to_string())),
        },
        None => execute(&cli.command, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: &Command, out: &mut Vec<u8>) -> Result<i32> {
    match command {
        Command::Rays { d, out: path } => rays(*d, path.as_deref(), out),
        Command::Count { graph, out: path } => count(graph, path.as_deref(), out),
        Command::Member { vector, cone } => member(vector, cone, out),
        Command::Search {
            d,
            seed,
            instances,
            max_vertices,
            out: dir,
        } => {
            let config = SearchConfig {
                d: *d,
                seed: *seed,
                instances: *instances,
                max_vertices: *max_vertices,
                ..SearchConfig::default()
            };
            search(&config, dir, out)
        }
        Command::VerifyLemma {
            cone_dir,
            out: path,
        } => verify_lemma(cone_dir.as_deref(), path.as_deref(), out),
    }
}

fn rays(d: usize, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let c = cone_rays(d)?;
    if let Some(p) = path {
        std::fs::write(p, cone_to_string(&c.cone))?;
    }
    writeln!(out, "{}", c.cone.len())?;
    Ok(0)
}

fn count(graph: &Path, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(graph).map_err(|e| in_file(graph, e))?;
    let text = vector_to_string(&count_vector(&g)?)?;
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn member(vector: &Path, cone: &Path, out: &mut dyn Write) -> Result<i32> {
    let x = read_vector(vector).map_err(|e| in_file(vector, e))?;
    let c = read_cone(cone).map_err(|e| in_file(cone, e))?;
    let cert = membership(&x, &c)?;
    if !cert.verify(&x, &c) {
        return Err(Error::Inconsistent(
            "membership certificate does not verify".into(),
        ));
    }
    match &cert {
        MembershipCertificate::Inside(coef) => {
            writeln!(out, "INSIDE")?;
            writeln!(out, "coefficients {}", join(coef))?;
            Ok(0)
        }
        MembershipCertificate::Outside(f) => {
            writeln!(out, "OUTSIDE")?;
            writeln!(out, "functional {}", join(f))?;
            Ok(1)
        }
    }
}

fn search(config: &SearchConfig, dir: &Path, out: &mut dyn Write) -> Result<i32> {
    let results = run_search(config, cached_bprime5()?)?;
    let mut violations = 0;
    for (outcome, graph) in &results {
        writeln!(out, "{outcome}")?;
        if let Some(g) = graph {
            violations += 1;
            let path = dir.join(format!("violation-{}-{}.graph", config.seed, outcome.index));
            write_graph(&path, g)?;
            writeln!(out, "REPRODUCER {}", path.display())?;
        }
    }
    writeln!(
        out,
        "SEARCH seed={} instances={} violations={violations}",
        config.seed,
        results.len()
    )?;
    Ok(if violations == 0 { 0 } else { 1 })
}

fn verify_lemma(dir: Option<&Path>, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let cones = match dir {
        Some(d) => ConeSet::load_dir(d)?,
        None => ConeSet::regenerated()?,
    };
    let mut text = String::new();
    for c in cones.iter() {
        let d = c.arity();
        let note = match published_ray_count(d) {
            Some(n) if n == c.len() => format!(" (published {n})"),
            Some(n) => format!(" (published {n}, MISMATCH)"),
            None => String::new(),
        };
        text.push_str(&format!("CONE K_{d} {} rays{note}\n", c.len()));
    }
    let reports = verify_all(&cones)?;
    let mut failed = false;
    for r in &reports {
        failed |= r.status == Status::Fail;
        text.push_str(&format!("{r}\n"));
    }
    if let Some(p) = path {
        std::fs::write(p, &text)?;
    }
    out.write_all(text.as_bytes())?;
    Ok(if failed { 1 } else { 0 })
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { .. } | Error::InvalidGraph(_) => {
            Error::Input(format!("{}: {e}", path.display()))
        }
        other => other,
    }
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
