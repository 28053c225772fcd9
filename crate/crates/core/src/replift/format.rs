//! Line-oriented text format for representations:
//!
//! ```text
//! # comment
//! p 2
//! n 2
//! gens 1 s
//! rel s s
//! mat s
//! 1 1
//! 0 1
//! ```

use std::fmt::Write as _;

use crate::finite_rings::{MatFp, PrimeCtx};
use crate::groups::{Presentation, Word};

use super::rep::Representation;
use super::RepError;

fn perr(line: usize, msg: impl Into<String>) -> RepError {
    RepError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses and validates a representation.
pub fn parse_rep(text: &str) -> Result<Representation, RepError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();

    let mut header = |key: &str| -> Result<(usize, String), RepError> {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| perr(0, format!("missing `{key}` line")))?;
        match l.split_once(char::is_whitespace) {
            Some((k, rest)) if k == key => Ok((ln, rest.trim().to_string())),
            _ => Err(perr(ln, format!("expected `{key} ...`"))),
        }
    };
    let (ln, p) = header("p")?;
    let p: u32 = p.parse().map_err(|_| perr(ln, "p must be an integer"))?;
    let ctx = PrimeCtx::new(p).map_err(|e| perr(ln, e.to_string()))?;
    let (ln, n) = header("n")?;
    let n: usize = n
        .parse()
        .map_err(|_| perr(ln, "n must be a nonnegative integer"))?;
    let (ln, gens) = header("gens")?;
    let mut toks = gens.split_whitespace();
    let k: usize = toks
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| perr(ln, "gens needs a count"))?;
    let names: Vec<String> = toks.map(str::to_string).collect();
    if names.len() != k {
        return Err(perr(
            ln,
            format!("gens declares {k} names but lists {}", names.len()),
        ));
    }

    let mut relators = Vec::new();
    while let Some(&(ln, l)) = lines.peek() {
        let Some(rest) = l.strip_prefix("rel") else {
            break;
        };
        if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
            break;
        }
        relators.push(Word::parse(rest, &names).map_err(|e| perr(ln, e.to_string()))?);
        lines.next();
    }
    let presentation =
        Presentation::new(names.clone(), relators).map_err(|e| perr(ln, e.to_string()))?;

    let mut mats: Vec<Option<MatFp>> = vec![None; k];
    while let Some((ln, l)) = lines.next() {
        let name = l
            .strip_prefix("mat")
            .filter(|r| r.starts_with(char::is_whitespace))
            .map(str::trim)
            .ok_or_else(|| perr(ln, format!("expected `mat <name>`, found `{l}`")))?;
        let gi = names
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| perr(ln, format!("unknown generator `{name}`")))?;
        if mats[gi].is_some() {
            return Err(perr(ln, format!("matrix for `{name}` given twice")));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (rl, row) = lines
                .next()
                .ok_or_else(|| perr(ln, format!("matrix `{name}` has fewer than {n} rows")))?;
            let vals = row
                .split_whitespace()
                .map(|t| t.parse::<u32>().ok().filter(|&v| v < p))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| perr(rl, format!("entries must be integers in [0, {p})")))?;
            if vals.len() != n {
                return Err(perr(
                    rl,
                    format!("expected {n} entries, found {}", vals.len()),
                ));
            }
            rows.push(vals);
        }
        let m = if n == 0 {
            MatFp::zero(ctx, 0)
        } else {
            MatFp::from_rows(ctx, &rows).map_err(|e| perr(ln, e.to_string()))?
        };
        mats[gi] = Some(m);
    }
    let gens = mats
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| perr(0, format!("no matrix for generator `{}`", names[i]))))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::checked(ctx, n, presentation, gens)
}

pub fn write_rep(rep: &Representation) -> String {
    let pres = rep.presentation();
    let names = pres.names();
    let mut out = String::new();
    let _ = writeln!(out, "p {}", rep.ctx().p());
    let _ = writeln!(out, "n {}", rep.dim());
    let _ = writeln!(out, "gens {} {}", names.len(), names.join(" "));
    for w in pres.relators() {
        let _ = writeln!(out, "rel {}", w.render(names));
    }
    for (name, m) in names.iter().zip(rep.gen_mats()) {
        let _ = writeln!(out, "mat {name}");
        for row in m.rows() {
            let _ = writeln!(
                out,
                "{}",
                row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
            );
        }
    }
    out
}
