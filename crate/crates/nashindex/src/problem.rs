//! The line-oriented problem file format.
//!
//! ```text
//! # the umbrella
//! ring: x, y, z
//! hypersurface: y^2 - x*z^2
//! function: y^2 - (x - z)^2
//! sing: y, z
//! ```
//!
//! Keys: `ring`, `hypersurface`, `function` or `form` (comma-separated
//! components), `sing`, `linear`, and the overrides `bound`,
//! `saturation-cap` and `work-limit`. Text after `#` is ignored.

use std::fmt;
use std::sync::Arc;

use nashindex_core::arith::{parse_poly, Poly, Ring};
use nashindex_core::nash::{HypersurfaceProblem, Omega, RingContext};
use nashindex_core::Error as CoreError;

/// A syntax or validation error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A parsed problem file.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemFile {
    pub ctx: Arc<RingContext>,
    pub hypersurface: Option<Poly>,
    pub omega: Option<Omega>,
    pub sing: Option<Vec<Poly>>,
    pub linear: Option<Poly>,
    pub bound: Option<u32>,
    pub saturation_cap: Option<usize>,
    pub work_limit: Option<u64>,
}

const KEYS: &[&str] = &["ring", "hypersurface", "function", "form", "sing", "linear", "bound", "saturation-cap", "work-limit"];

struct Entry<'a> {
    key: &'a str,
    value: &'a str,
    line: usize,
    /// Column of the first character of `value`.
    column: usize,
}

impl Entry<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column + offset, message: message.into() }
    }

    /// Comma-separated pieces with their character offsets in the value.
    fn pieces(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, piece) in self.value.split(',').enumerate() {
            if i > 0 {
                start += 1;
            }
            out.push((self.value[..start].chars().count(), piece));
            start += piece.len();
        }
        out
    }

    fn poly_at(&self, ring: &Arc<Ring>, offset: usize, text: &str) -> Result<Poly, ParseError> {
        parse_poly(ring, text).map_err(|e| match e {
            CoreError::Parse { column, message } => self.err(offset + column - 1, message),
            CoreError::NonRational { column, message } => {
                self.err(offset + column - 1, format!("non-rational coefficient: {message}"))
            }
            CoreError::UnknownVariable(name) => {
                let at = find_word(text, &name).unwrap_or(0);
                self.err(offset + at, format!("unknown variable `{name}`"))
            }
            e => self.err(offset, e.to_string()),
        })
    }

    fn poly(&self, ring: &Arc<Ring>) -> Result<Poly, ParseError> {
        self.poly_at(ring, 0, self.value)
    }

    fn poly_list(&self, ring: &Arc<Ring>) -> Result<Vec<Poly>, ParseError> {
        self.pieces().into_iter().map(|(at, text)| self.poly_at(ring, at, text)).collect()
    }

    fn number<T: std::str::FromStr>(&self) -> Result<T, ParseError> {
        let lead = self.value.len() - self.value.trim_start().len();
        self.value.trim().parse().map_err(|_| self.err(lead, format!("expected a non-negative integer for `{}`", self.key)))
    }
}

/// Character offset of `word` as a whole identifier in `text`.
fn find_word(text: &str, word: &str) -> Option<usize> {
    let is_ident = |c: char| c.is_alphanumeric() || c == '_';
    let mut from = 0;
    while let Some(i) = text[from..].find(word) {
        let at = from + i;
        let before = text[..at].chars().next_back();
        let after = text[at + word.len()..].chars().next();
        if !before.is_some_and(is_ident) && !after.is_some_and(is_ident) {
            return Some(text[..at].chars().count());
        }
        from = at + word.len();
    }
    None
}

fn split_lines(text: &str) -> Result<Vec<Entry<'_>>, ParseError> {
    let mut entries: Vec<Entry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.chars().take_while(|c| c.is_whitespace()).count();
        let Some(colon) = line.find(':') else {
            return Err(ParseError { line: i + 1, column: indent + 1, message: "expected `key: value`".into() });
        };
        let key = line[..colon].trim();
        if !KEYS.contains(&key) {
            return Err(ParseError { line: i + 1, column: indent + 1, message: format!("unknown key `{key}`") });
        }
        if let Some(prev) = entries.iter().find(|e| e.key == key) {
            return Err(ParseError {
                line: i + 1,
                column: indent + 1,
                message: format!("duplicate key `{key}` (first given on line {})", prev.line),
            });
        }
        let value = &line[colon + 1..];
        entries.push(Entry { key, value, line: i + 1, column: line[..colon + 1].chars().count() + 1 });
    }
    Ok(entries)
}

fn ring_names(e: &Entry) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = Vec::new();
    for (at, piece) in e.pieces() {
        let name = piece.trim();
        let lead = at + piece.chars().take_while(|c| c.is_whitespace()).count();
        let valid = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(e.err(lead, format!("invalid variable name `{name}`")));
        }
        if names.iter().any(|n| n == name) {
            return Err(e.err(lead, format!("variable `{name}` declared twice")));
        }
        names.push(name.to_string());
    }
    Ok(names)
}

/// Parses a problem file. Every error carries the position it refers to.
pub fn parse_problem_file(text: &str) -> Result<ProblemFile, ParseError> {
    let entries = split_lines(text)?;
    let get = |k: &str| entries.iter().find(|e| e.key == k);
    let Some(ring) = get("ring") else {
        let (line, column) = entries.first().map_or((1, 1), |e| (e.line, 1));
        return Err(ParseError { line, column, message: "missing ring declaration".into() });
    };
    let names = ring_names(ring)?;
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ctx = RingContext::new(&refs).map_err(|e| ring.err(0, e.to_string()))?;
    let a = ctx.a_ring().clone();

    let hypersurface = get("hypersurface").map(|e| e.poly(&a)).transpose()?;
    if let (Some(h), Some(e)) = (&hypersurface, get("hypersurface")) {
        if h.is_constant() {
            return Err(e.err(0, "the hypersurface equation must be nonconstant"));
        }
        if !h.constant_term().is_zero() {
            return Err(e.err(0, "the hypersurface does not pass through the origin"));
        }
    }
    let omega = match (get("function"), get("form")) {
        (Some(_), Some(form)) => return Err(form.err(0, "give either `function` or `form`, not both")),
        (Some(e), None) => {
            let f = e.poly(&a)?;
            if !f.constant_term().is_zero() {
                return Err(e.err(0, "the function must vanish at the origin"));
            }
            Some(Omega::Function(f))
        }
        (None, Some(e)) => {
            let comps = e.poly_list(&a)?;
            if comps.len() != names.len() {
                return Err(e.err(0, format!("the form needs {} components, got {}", names.len(), comps.len())));
            }
            Some(Omega::Form(comps))
        }
        (None, None) => None,
    };
    let sing = get("sing").map(|e| e.poly_list(&a)).transpose()?;
    let linear = match get("linear") {
        Some(e) => {
            let l = e.poly(&a)?;
            if l.is_zero() || l.terms().any(|(_, m)| m.deg() != 1) {
                return Err(e.err(0, "`linear` must be a nonzero linear form"));
            }
            Some(l)
        }
        None => None,
    };
    let bound = get("bound").map(|e| e.number::<u32>()).transpose()?;
    if let (Some(0), Some(e)) = (bound, get("bound")) {
        return Err(e.err(0, "the twist bound must be positive"));
    }
    let saturation_cap = get("saturation-cap").map(|e| e.number()).transpose()?;
    let work_limit = get("work-limit").map(|e| e.number()).transpose()?;
    Ok(ProblemFile { ctx, hypersurface, omega, sing, linear, bound, saturation_cap, work_limit })
}

/// Parses a problem file into a validated problem.
pub fn parse_problem(text: &str) -> Result<HypersurfaceProblem, ParseError> {
    let file = parse_problem_file(text)?;
    file.problem().map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })
}

impl ProblemFile {
    /// The hypersurface problem; needs `hypersurface` and a form.
    pub fn problem(&self) -> Result<HypersurfaceProblem, CoreError> {
        let h = self.hypersurface.clone().ok_or_else(|| CoreError::InvalidInput("missing hypersurface".into()))?;
        let omega = self.omega.clone().ok_or_else(|| CoreError::InvalidInput("missing function or form".into()))?;
        HypersurfaceProblem::new(&self.ctx, h, omega, self.sing.clone())
    }

    /// The function, if the form was given as one.
    pub fn function(&self) -> Option<&Poly> {
        match &self.omega {
            Some(Omega::Function(f)) => Some(f),
            _ => None,
        }
    }
}

fn join(polys: &[Poly]) -> String {
    polys.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ctx.x_names().join(", "))?;
        if let Some(h) = &self.hypersurface {
            writeln!(f, "hypersurface: {h}")?;
        }
        match &self.omega {
            Some(Omega::Function(g)) => writeln!(f, "function: {g}")?,
            Some(Omega::Form(c)) => writeln!(f, "form: {}", join(c))?,
            None => {}
        }
        if let Some(s) = &self.sing {
            writeln!(f, "sing: {}", join(s))?;
        }
        if let Some(l) = &self.linear {
            writeln!(f, "linear: {l}")?;
        }
        if let Some(b) = self.bound {
            writeln!(f, "bound: {b}")?;
        }
        if let Some(c) = self.saturation_cap {
            writeln!(f, "saturation-cap: {c}")?;
        }
        if let Some(w) = self.work_limit {
            writeln!(f, "work-limit: {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const UMBRELLA: &str = "ring: x, y, z\nhypersurface: y^2 - x*z^2\nfunction: y^2 - (x - z)^2\nsing: y, z\n";

    #[test]
    fn umbrella_file() {
        let p = parse_problem_file(UMBRELLA).unwrap();
        assert_eq!(p.ctx.x_names(), ["x", "y", "z"]);
        assert_eq!(p.hypersurface.as_ref().unwrap().to_string(), parse_poly(p.ctx.a_ring(), "y^2 - x*z^2").unwrap().to_string());
        assert_eq!(p.sing.as_ref().unwrap().len(), 2);
        assert!(parse_problem(UMBRELLA).is_ok());
    }

    #[test]
    fn smooth_line() {
        let p = parse_problem("ring: x, y\nhypersurface: y\nfunction: x^2 + y").unwrap();
        assert_eq!(p.context().n(), 2);
        assert!(p.sing_override().is_none());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\nring: x, y   # two variables\n  hypersurface: y\nfunction: x^2 + y\n";
        assert!(parse_problem(text).is_ok());
    }

    #[test]
    fn error_positions() {
        let e = parse_problem_file("hypersurface: y^2").unwrap_err();
        assert_eq!(e.message, "missing ring declaration");
        assert_eq!((e.line, e.column), (1, 1));

        let e = parse_problem_file("ring: x, y\nhypersurface: y^2 + w").unwrap_err();
        assert_eq!((e.line, e.column), (2, 21));
        assert!(e.message.contains("`w`"));

        let e = parse_problem_file("ring: x, y\nhypersurface: y + 1.5*x").unwrap_err();
        assert_eq!((e.line, e.column), (2, 19));
        assert!(e.message.contains("non-rational"));

        let e = parse_problem_file("ring: x, y\nhypersurface: y + * x").unwrap_err();
        assert_eq!((e.line, e.column), (2, 19));

        let e = parse_problem_file("ring: x, y\nsing: y, x + )").unwrap_err();
        assert_eq!((e.line, e.column), (2, 14));

        let e = parse_problem_file("ring: x, y\ncolour: red").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));

        let e = parse_problem_file("ring: x, y\nnonsense").unwrap_err();
        assert_eq!(e.line, 2);

        let e = parse_problem_file("ring: x, 2y").unwrap_err();
        assert_eq!((e.line, e.column), (1, 10));

        assert!(parse_problem_file("ring: x, y\nring: x, y").is_err());
        assert!(parse_problem_file("ring: x, y\nhypersurface: y + 1").is_err());
        assert!(parse_problem_file("ring: x, y\nform: x").is_err());
        assert!(parse_problem_file("ring: x, y\nfunction: x\nform: x, y").is_err());
        assert!(parse_problem_file("ring: x, y\nlinear: x^2").is_err());
        assert!(parse_problem_file("ring: x, y\nbound: -1").is_err());
        assert!(parse_problem_file("ring: x, y\nbound: 0").is_err());
    }

    #[test]
    fn overrides() {
        let p = parse_problem_file("ring: x, y\nbound: 3\nsaturation-cap: 10\nwork-limit: 1000").unwrap();
        assert_eq!((p.bound, p.saturation_cap, p.work_limit), (Some(3), Some(10), Some(1000)));
    }

    #[test]
    fn round_trip() {
        let text = "ring: a, b, c\nhypersurface: 1/2*a - b^3\nform: a, -2/3*b*c, (a + c)^2\nsing: a, b\nlinear: a - c\nbound: 2\n";
        let p = parse_problem_file(text).unwrap();
        let q = parse_problem_file(&p.to_string()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.to_string(), q.to_string());
    }
}
