use clap::Subcommand;
use hallshuffle::affine::{centralizer_generators, in_centralizer, parse_word, AffineError};
use hallshuffle::AffinePerm;
use serde_json::json;

use crate::{CliError, Format};

#[derive(Subcommand, Debug)]
pub enum AffineCmd {
    /// Compose words left to right and print the window
    Compose {
        words: Vec<String>,
        #[arg(short)]
        n: Option<usize>,
    },
    Length {
        word: String,
        #[arg(short)]
        n: Option<usize>,
    },
    Degree {
        word: String,
        #[arg(short)]
        n: Option<usize>,
    },
    /// Cycles of the finite projection as (length, degree) pairs
    Cycles {
        word: String,
        #[arg(short)]
        n: Option<usize>,
    },
    /// Cycle (degree, length) pairs in slope order
    Convexpath {
        word: String,
        #[arg(short)]
        n: Option<usize>,
    },
    /// Generators of the centralizer of omega^{md} in rank nd, optionally testing a word
    Centralizer {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        n: usize,
        d: usize,
        word: Option<String>,
    },
    /// Whether u <= v in the Bruhat order
    Bruhat {
        u: String,
        v: String,
        #[arg(short)]
        n: Option<usize>,
    },
}

fn affine_err(e: AffineError) -> CliError {
    CliError::Usage(e.to_string())
}

/// Smallest rank in which every generator index of the words is valid (at least 2).
fn infer_rank(words: &[&str]) -> usize {
    let mut n = 2;
    for tok in words.iter().flat_map(|w| w.split_whitespace()) {
        let base = tok.split('^').next().unwrap_or("");
        if let Some(i) = base.strip_prefix('s').and_then(|i| i.parse::<usize>().ok()) {
            n = n.max(i + 1);
        } else if let Some(i) = base.strip_prefix('y').and_then(|i| i.parse::<usize>().ok()) {
            n = n.max(i);
        }
    }
    n
}

fn word(n: Option<usize>, src: &str, all: &[&str]) -> Result<AffinePerm, CliError> {
    parse_word(n.unwrap_or_else(|| infer_rank(all)), src).map_err(affine_err)
}

fn pairs<A: std::fmt::Display, B: std::fmt::Display>(v: &[(A, B)]) -> String {
    let s: Vec<String> = v.iter().map(|(a, b)| format!("({a},{b})")).collect();
    format!("[{}]", s.join(","))
}

fn perm(v: &AffinePerm, format: Format) -> String {
    match format {
        Format::Json => v.to_json(),
        Format::Text => v.to_string(),
        Format::Latex => format!("[{}]", v.window().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")),
    }
}

fn scalar(x: impl std::fmt::Display, key: &str, format: Format) -> String {
    match format {
        Format::Json => json!({ key: x.to_string() }).to_string(),
        _ => x.to_string(),
    }
}

pub fn run(cmd: AffineCmd, format: Format) -> Result<String, CliError> {
    Ok(match cmd {
        AffineCmd::Compose { words, n } => {
            let all: Vec<&str> = words.iter().map(String::as_str).collect();
            let rank = n.unwrap_or_else(|| infer_rank(&all));
            let mut acc = AffinePerm::identity(rank);
            for w in &all {
                acc = acc.compose(&parse_word(rank, w).map_err(affine_err)?);
            }
            perm(&acc, format)
        }
        AffineCmd::Length { word: w, n } => scalar(word(n, &w, &[&w])?.length(), "length", format),
        AffineCmd::Degree { word: w, n } => scalar(word(n, &w, &[&w])?.degree(), "degree", format),
        AffineCmd::Cycles { word: w, n } => {
            let c = word(n, &w, &[&w])?.cycle_data();
            match format {
                Format::Json => {
                    json!({ "cycles": c.0.iter().map(|(l, d)| json!({"length": l.to_string(), "degree": d.to_string()})).collect::<Vec<_>>() }).to_string()
                }
                _ => pairs(&c.0),
            }
        }
        AffineCmd::Convexpath { word: w, n } => {
            let path = word(n, &w, &[&w])?.convex_path();
            match format {
                Format::Json => json!({ "path": path.iter().map(|(d, l)| json!([d.to_string(), l.to_string()])).collect::<Vec<_>>() }).to_string(),
                _ => pairs(&path),
            }
        }
        AffineCmd::Centralizer { m, n, d, word: w } => {
            let gens = centralizer_generators(m, n, d).map_err(affine_err)?;
            let member = w.map(|w| parse_word(n * d, &w).map(|v| in_centralizer(&v, d))).transpose().map_err(affine_err)?;
            match format {
                Format::Json => {
                    let gens: Vec<serde_json::Value> = gens.iter().map(|g| serde_json::from_str(&g.to_json()).expect("valid JSON")).collect();
                    let mut out = json!({ "generators": gens });
                    if let Some(b) = member {
                        out["member"] = json!(b);
                    }
                    out.to_string()
                }
                _ => {
                    let mut lines: Vec<String> = gens.iter().map(|g| perm(g, format)).collect();
                    if let Some(b) = member {
                        lines.push(format!("member: {b}"));
                    }
                    lines.join("\n")
                }
            }
        }
        AffineCmd::Bruhat { u, v, n } => {
            let (a, b) = (word(n, &u, &[&u, &v])?, word(n, &v, &[&u, &v])?);
            let leq = a.bruhat_leq(&b).map_err(affine_err)?;
            match format {
                Format::Json => json!({ "leq": leq }).to_string(),
                _ => leq.to_string(),
            }
        }
    })
}
