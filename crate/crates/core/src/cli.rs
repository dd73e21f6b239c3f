//! Command-line front end.
//!
//! Exit codes: 0 on success (or membership / verification holding), 1 when
//! the answer is negative, 2 on usage, parse, or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::families::{
    family_h, family_k, neumann_trials, verify_corollary_sweep, verify_theorem_sweep, FamilySpec,
};
use crate::graph::{StallingsGraph, DEFAULT_MAX_VERTICES};
use crate::pullback::pullback_with_pairs;
use crate::subgroup_file::{resolve_alphabet, FileError, SubgroupFile};
use crate::word::{parse_word, Word};

/// Overrides the vertex cap on graph constructions.
pub const MAX_VERTICES_ENV: &str = "STALLINGS_MAX_VERTICES";

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "stallings", version, about = "Stallings graphs of subgroups of free groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the rank of the subgroup generated by the words in FILE.
    Rank { file: PathBuf },

    /// Print the rank of the intersection of two subgroups.
    Intersect {
        h: PathBuf,
        k: PathBuf,
        /// Write the intersection graph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Also print a free basis of the intersection.
        #[arg(long)]
        basis: bool,
        /// Keep hanging trees in the DOT output.
        #[arg(long)]
        untrimmed: bool,
    },

    /// Test whether WORD lies in the subgroup; prints yes or no.
    Member { file: PathBuf, word: String },

    /// Print the generators of a family member: `H M N K L` or `K N`.
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        #[arg(allow_negative_numbers = true, required = true)]
        params: Vec<i64>,
    },

    /// Check the family rank formula over a parameter box.
    Verify {
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        n_max: usize,
        /// Also check the maximal-rank pairs.
        #[arg(long)]
        corollary: bool,
        /// Number of random pairs to check against the rank bounds.
        #[arg(long, value_name = "T", default_value_t = 0)]
        neumann_trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the per-case CSV report here (`-` for standard output).
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "K", alias = "k")]
    K,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
}

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_ERROR;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn max_vertices() -> Result<usize, CliError> {
    match std::env::var(MAX_VERTICES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!("{MAX_VERTICES_ENV} must be a nonnegative integer, got '{v}'"))
        }),
        Err(_) => Ok(DEFAULT_MAX_VERTICES),
    }
}

fn write_file(path: &Path, contents: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let res = if path == Path::new("-") {
        out.write_all(contents.as_bytes())
    } else {
        std::fs::write(path, contents)
    };
    res.map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, CliError> {
    let cap = max_vertices()?;
    match command {
        Command::Rank { file } => {
            let f = SubgroupFile::read(&file)?;
            let alphabet = resolve_alphabet(&[&f], &[])?;
            let g = StallingsGraph::subgroup_with_limit(&f.words(&alphabet)?, &alphabet, cap)?;
            let _ = writeln!(out, "{}", g.rank());
            Ok(EXIT_OK)
        }
        Command::Intersect {
            h,
            k,
            dot,
            basis,
            untrimmed,
        } => {
            let (fh, fk) = (SubgroupFile::read(&h)?, SubgroupFile::read(&k)?);
            let alphabet = resolve_alphabet(&[&fh, &fk], &[])?;
            let gh = StallingsGraph::subgroup_with_limit(&fh.words(&alphabet)?, &alphabet, cap)?;
            let gk = StallingsGraph::subgroup_with_limit(&fk.words(&alphabet)?, &alphabet, cap)?;
            let full = pullback_with_pairs(&gh, &gk, cap)?.graph;
            let core = full.core_trim();
            let _ = writeln!(out, "{}", core.rank());
            if basis {
                for w in core.basis() {
                    let _ = writeln!(out, "{w}");
                }
            }
            if let Some(path) = dot {
                let g = if untrimmed { &full } else { &core };
                write_file(&path, &g.to_dot(), out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Member { file, word } => {
            let f = SubgroupFile::read(&file)?;
            let alphabet = resolve_alphabet(&[&f], &[&word])?;
            let g = StallingsGraph::subgroup_with_limit(&f.words(&alphabet)?, &alphabet, cap)?;
            let w = parse_word(&word, &alphabet)?;
            if g.contains(&w)? {
                let _ = writeln!(out, "yes");
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(out, "no");
                Ok(EXIT_NO)
            }
        }
        Command::Family { kind, params } => {
            let words = match (kind, params.as_slice()) {
                (FamilyKind::H, &[m, n, k, l]) => family_h(&FamilySpec::from_signed(m, n, k, l)?),
                (FamilyKind::K, &[n]) => {
                    let n = usize::try_from(n).map_err(|_| Error::RankTooSmall { name: "n", value: n })?;
                    family_k(n)?
                }
                (FamilyKind::H, _) => {
                    return Err(CliError::Usage("usage: family H M N K L".into()))
                }
                (FamilyKind::K, _) => return Err(CliError::Usage("usage: family K N".into())),
            };
            for w in &words {
                let _ = writeln!(out, "{w}");
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            m_max,
            n_max,
            corollary,
            neumann_trials: trials,
            seed,
            csv,
        } => {
            if m_max < 2 || n_max < 2 {
                return Err(CliError::Usage("--m-max and --n-max must be at least 2".into()));
            }
            let report = verify_theorem_sweep(m_max, n_max);
            let mut ok = report.passed();
            let _ = write!(out, "{}", report.summary());
            if corollary {
                let cases = verify_corollary_sweep(m_max, n_max);
                let passed = cases.iter().filter(|c| c.pass()).count();
                let _ = writeln!(out, "maximal-rank pairs: {passed}/{} cases pass", cases.len());
                for c in cases.iter().filter(|c| !c.pass()) {
                    let _ = writeln!(
                        out,
                        "  FAIL m={} n={}: expected {}, computed {:?}",
                        c.m, c.n, c.expected, c.computed
                    );
                }
                ok &= passed == cases.len();
            }
            if trials > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let result = neumann_trials(&mut rng, trials);
                let _ = write!(out, "{}", result.summary());
                ok &= result.passed();
            }
            if let Some(path) = csv {
                write_file(&path, &report.to_csv(), out)?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_NO })
        }
    }
}

/// Renders generator words one per line, the format read back by
/// [`SubgroupFile::parse`].
pub fn render_generators(words: &[Word]) -> String {
    words.iter().map(|w| format!("{w}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["stallings"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn family_commands() {
        assert_eq!(run_args(&["family", "H", "3", "3", "1", "2"]).1, "a\nbab^-1\nb^2ab^-2\n");
        assert_eq!(run_args(&["family", "K", "2"]).1, "b\naba^-1\n");
        assert_eq!(run_args(&["family", "H", "2", "2", "0", "0"]).1, "a\nba^2b^-1\n");
    }

    #[test]
    fn family_range_errors() {
        let (code, _, err) = run_args(&["family", "H", "3", "3", "2", "0"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("0 ≤ k ≤ m−2, 0 ≤ ℓ ≤ n−1"), "{err}");
        let (code, _, err) = run_args(&["family", "H", "3", "3", "-1", "0"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("0 ≤ k ≤ m−2"), "{err}");
        assert_eq!(run_args(&["family", "K", "1"]).0, EXIT_ERROR);
        assert_eq!(run_args(&["family", "K", "2", "3"]).0, EXIT_ERROR);
        assert_eq!(run_args(&["family", "X", "2"]).0, EXIT_ERROR);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).0, EXIT_ERROR);
        assert_eq!(run_args(&["rank"]).0, EXIT_ERROR);
        assert_eq!(run_args(&["verify", "--m-max", "1", "--n-max", "3"]).0, EXIT_ERROR);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_small_box() {
        let (code, out, _) = run_args(&["verify", "--m-max", "2", "--n-max", "2", "--corollary"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("2/2 cases pass"));
        assert!(out.contains("maximal-rank pairs: 1/1 cases pass"));
    }
}
