//! Versioned text documents holding one exact series.
//!
//! ```text
//! dshuffle-series v1
//! group: Z3
//! cap: 4
//! alphabet: X
//! term: x0*x[1] -1/2
//! ```
//!
//! Words are letters joined by `*`, the empty word is `1`. Letters are
//! `x0`, `x[r]`, `y[n;r]` and `z[n;r]`, where `r` lists the residues of the
//! group element (empty for the trivial group). A `V` term appends the
//! group component as `@[r]`. Coefficients are exact rationals.

use std::fmt;

use num_traits::Zero;

use crate::crossed_product::{VElem, WElem};
use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{format_rational, parse_rational, Rational};
use crate::foundations::GroupSpec;
use crate::word_algebras::{
    encode_word, word_degree, x_word_to_y, Letter, Series, Word, XLetter, XSeries, XWord, YLetter,
    YSeries, ZLetter,
};

/// Header line of the current format.
pub const FORMAT_HEADER: &str = "dshuffle-series v1";

/// Alphabet tag of a document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    X,
    Y,
    Z,
    V,
}

impl Alphabet {
    pub fn tag(self) -> &'static str {
        match self {
            Alphabet::X => "X",
            Alphabet::Y => "Y",
            Alphabet::Z => "Z",
            Alphabet::V => "V",
        }
    }

    fn parse(s: &str, position: &str) -> Result<Self> {
        match s {
            "X" => Ok(Alphabet::X),
            "Y" => Ok(Alphabet::Y),
            "Z" => Ok(Alphabet::Z),
            "V" => Ok(Alphabet::V),
            _ => Err(parse_error(position, format!("unknown alphabet `{s}`, expected X, Y, Z or V"))),
        }
    }
}

/// A series of any of the four kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum TypedSeries {
    X(XSeries),
    Y(YSeries),
    Z(WElem),
    V(VElem),
}

impl TypedSeries {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            TypedSeries::X(_) => Alphabet::X,
            TypedSeries::Y(_) => Alphabet::Y,
            TypedSeries::Z(_) => Alphabet::Z,
            TypedSeries::V(_) => Alphabet::V,
        }
    }

    pub fn group(&self) -> &GroupSpec {
        match self {
            TypedSeries::X(s) => s.group(),
            TypedSeries::Y(s) => s.group(),
            TypedSeries::Z(s) => s.group(),
            TypedSeries::V(s) => s.group(),
        }
    }

    pub fn cap(&self) -> usize {
        match self {
            TypedSeries::X(s) => s.cap(),
            TypedSeries::Y(s) => s.cap(),
            TypedSeries::Z(s) => s.cap(),
            TypedSeries::V(s) => s.cap(),
        }
    }

    /// The `X` series, or a domain error naming the actual alphabet.
    pub fn into_x(self) -> Result<XSeries> {
        match self {
            TypedSeries::X(s) => Ok(s),
            other => Err(AlgebraError::Domain(format!(
                "expected an X series, got alphabet {}",
                other.alphabet().tag()
            ))),
        }
    }
}

/// Parsed document: header fields plus encoded terms, before typing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesDocument {
    pub version: u32,
    pub group: GroupSpec,
    pub cap: usize,
    pub alphabet: Alphabet,
    /// `(encoded word, coefficient)` in file order.
    pub terms: Vec<(String, String)>,
}

fn parse_error(position: &str, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { position: position.to_string(), message: message.into() }
}

impl SeriesDocument {
    /// Reads the header and term lines. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines.next().ok_or_else(|| parse_error("line 1", "empty document"))?;
        let version = header
            .strip_prefix("dshuffle-series v")
            .and_then(|v| v.parse::<u32>().ok())
            .ok_or_else(|| parse_error(&format!("line {ln}"), format!("expected `{FORMAT_HEADER}`")))?;
        if version != 1 {
            return Err(parse_error(&format!("line {ln}"), format!("unsupported format version {version}")));
        }
        let mut group = None;
        let mut cap = None;
        let mut alphabet = None;
        let mut terms = Vec::new();
        for (ln, line) in lines {
            let pos = format!("line {ln}");
            let (key, value) =
                line.split_once(':').ok_or_else(|| parse_error(&pos, "expected `key: value`"))?;
            let value = value.trim();
            match key.trim() {
                "group" => group = Some(GroupSpec::parse(value).map_err(|e| parse_error(&pos, e.to_string()))?),
                "cap" => {
                    cap = Some(value.parse::<usize>().map_err(|_| parse_error(&pos, format!("bad cap `{value}`")))?)
                }
                "alphabet" => alphabet = Some(Alphabet::parse(value, &pos)?),
                "term" => {
                    let (w, c) = value
                        .rsplit_once(char::is_whitespace)
                        .ok_or_else(|| parse_error(&pos, "expected `term: <word> <coefficient>`"))?;
                    terms.push((w.trim().to_string(), c.trim().to_string()));
                }
                other => return Err(parse_error(&pos, format!("unknown key `{other}`"))),
            }
        }
        Ok(SeriesDocument {
            version,
            group: group.ok_or_else(|| parse_error("header", "missing `group:`"))?,
            cap: cap.ok_or_else(|| parse_error("header", "missing `cap:`"))?,
            alphabet: alphabet.ok_or_else(|| parse_error("header", "missing `alphabet:`"))?,
            terms,
        })
    }

    /// Decodes every term into a typed series, validating words against the
    /// alphabet and the cap.
    pub fn to_series(&self) -> Result<TypedSeries> {
        let g = &self.group;
        let cap = self.cap;
        match self.alphabet {
            Alphabet::X => Ok(TypedSeries::X(self.collect(|w, pos| parse_x_word(g, w, pos))?)),
            Alphabet::Y => Ok(TypedSeries::Y(self.collect(|w, pos| parse_y_word(g, w, pos))?)),
            Alphabet::Z => Ok(TypedSeries::Z(self.collect(|w, pos| parse_z_word(g, w, pos))?)),
            Alphabet::V => {
                let mut v = VElem::zero(g, cap);
                for (i, (w, c)) in self.terms.iter().enumerate() {
                    let pos = format!("term {}", i + 1);
                    let (word, comp) = w
                        .rsplit_once('@')
                        .ok_or_else(|| parse_error(&pos, "a V term needs a group component `@[r]`"))?;
                    let xw = parse_x_word(g, word, &pos)?;
                    check_degree(&xw, cap, &pos)?;
                    let k = parse_element(g, comp.trim(), &pos)?;
                    let coeff = parse_coefficient(c, &pos)?;
                    let piece = VElem::from_pair(&XSeries::monomial(g, cap, xw, coeff), k);
                    v = &v + &piece;
                }
                Ok(TypedSeries::V(v))
            }
        }
    }

    fn collect<L: Letter>(&self, parse: impl Fn(&str, &str) -> Result<Word<L>>) -> Result<Series<L>> {
        let mut s = Series::zero(&self.group, self.cap);
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let pos = format!("term {}", i + 1);
            let word = parse(w, &pos)?;
            check_degree(&word, self.cap, &pos)?;
            s.add_term(word, parse_coefficient(c, &pos)?);
        }
        Ok(s)
    }

    /// Canonical document of a series: terms ordered by degree, then word.
    pub fn from_series(s: &TypedSeries) -> Self {
        let g = s.group();
        let terms = match s {
            TypedSeries::X(x) => encode_terms(x),
            TypedSeries::Y(y) => encode_terms(y),
            TypedSeries::Z(z) => encode_terms(z),
            TypedSeries::V(v) => {
                let mut t: Vec<(usize, XWord, usize, Rational)> =
                    v.terms().map(|(w, k, c)| (word_degree(w), w.clone(), k, c.clone())).collect();
                t.sort_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
                t.into_iter()
                    .map(|(_, w, k, c)| {
                        (format!("{}@[{}]", encode_word(&w, g), residues(g, k)), format_rational(&c))
                    })
                    .collect()
            }
        };
        SeriesDocument { version: 1, group: g.clone(), cap: s.cap(), alphabet: s.alphabet(), terms }
    }
}

impl fmt::Display for SeriesDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dshuffle-series v{}", self.version)?;
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "cap: {}", self.cap)?;
        writeln!(f, "alphabet: {}", self.alphabet.tag())?;
        for (w, c) in &self.terms {
            writeln!(f, "term: {w} {c}")?;
        }
        Ok(())
    }
}

/// Parses a document and decodes its series.
pub fn parse_series(text: &str) -> Result<TypedSeries> {
    SeriesDocument::parse(text)?.to_series()
}

/// Canonical text of a series.
pub fn emit_series(s: &TypedSeries) -> String {
    SeriesDocument::from_series(s).to_string()
}

fn encode_terms<L: Letter>(s: &Series<L>) -> Vec<(String, String)> {
    s.sorted_terms().into_iter().map(|(w, c)| (encode_word(w, s.group()), format_rational(c))).collect()
}

fn residues(group: &GroupSpec, k: usize) -> String {
    let r: Vec<String> = group.element(k).residues().iter().map(|x| x.to_string()).collect();
    r.join(",")
}

fn check_degree<L: Letter>(w: &[L], cap: usize, pos: &str) -> Result<()> {
    let d = word_degree(w);
    if d > cap {
        return Err(parse_error(pos, format!("word of degree {d} exceeds cap {cap}")));
    }
    Ok(())
}

fn parse_coefficient(c: &str, pos: &str) -> Result<Rational> {
    let r = parse_rational(c).map_err(|e| parse_error(pos, e.to_string()))?;
    if r.is_zero() {
        return Err(parse_error(pos, "zero coefficient"));
    }
    Ok(r)
}

/// `[r1,...,rk]` to an element index.
fn parse_element(group: &GroupSpec, s: &str, pos: &str) -> Result<usize> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| parse_error(pos, format!("bad group element `{s}`")))?;
    let res: Vec<i64> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|r| r.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_error(pos, format!("bad residue in `{s}`")))?
    };
    let e = group.make(&res).map_err(|e| parse_error(pos, e.to_string()))?;
    group.index_of(&e).map_err(|e| parse_error(pos, e.to_string()))
}

fn split_letters(w: &str) -> Vec<&str> {
    let w = w.trim();
    if w == "1" {
        Vec::new()
    } else {
        w.split('*').map(str::trim).collect()
    }
}

/// `n;[r]`-style body of a `y[...]` or `z[...]` letter.
fn parse_graded(group: &GroupSpec, body: &str, pos: &str) -> Result<(usize, usize)> {
    let (n, r) = body.split_once(';').ok_or_else(|| parse_error(pos, format!("expected `n;r` in `{body}`")))?;
    let n: usize = n.trim().parse().map_err(|_| parse_error(pos, format!("bad degree `{n}`")))?;
    if n == 0 || n > u8::MAX as usize {
        return Err(parse_error(pos, format!("letter degree {n} out of range")));
    }
    Ok((n, parse_element(group, &format!("[{}]", r.trim()), pos)?))
}

fn parse_x_letter(group: &GroupSpec, l: &str, pos: &str) -> Result<XLetter> {
    if l == "x0" {
        return Ok(XLetter::X0);
    }
    let body = l.strip_prefix('x').ok_or_else(|| parse_error(pos, format!("`{l}` is not an X letter")))?;
    Ok(XLetter::g(parse_element(group, body, pos)?))
}

fn parse_x_word(group: &GroupSpec, w: &str, pos: &str) -> Result<XWord> {
    split_letters(w).into_iter().map(|l| parse_x_letter(group, l, pos)).collect()
}

/// `Y` words may also be written in `X` letters, provided they end in some
/// `x_g`; words ending in `x0` are not in `Y`.
fn parse_y_word(group: &GroupSpec, w: &str, pos: &str) -> Result<Word<YLetter>> {
    let parts = split_letters(w);
    if parts.iter().all(|l| l.starts_with('y')) {
        return parts
            .into_iter()
            .map(|l| {
                let body = l
                    .strip_prefix("y[")
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(|| parse_error(pos, format!("bad Y letter `{l}`")))?;
                let (n, g) = parse_graded(group, body, pos)?;
                Ok(YLetter::new(n, g))
            })
            .collect();
    }
    let xw = parse_x_word(group, w, pos)?;
    x_word_to_y(&xw).ok_or_else(|| parse_error(pos, format!("word `{w}` ends in x0, so it is not a Y word")))
}

fn parse_z_word(group: &GroupSpec, w: &str, pos: &str) -> Result<Word<ZLetter>> {
    split_letters(w)
        .into_iter()
        .map(|l| {
            let body = l
                .strip_prefix("z[")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| parse_error(pos, format!("bad Z letter `{l}`")))?;
            let (n, g) = parse_graded(group, body, pos)?;
            Ok(ZLetter::new(n, g))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::q;

    #[test]
    fn empty_term_list_is_zero() {
        let s = parse_series("dshuffle-series v1\ngroup: Z2\ncap: 3\nalphabet: X\n").unwrap();
        assert_eq!(s, TypedSeries::X(XSeries::zero(&GroupSpec::cyclic(2), 3)));
    }

    #[test]
    fn x_round_trip_and_canonical_order() {
        let text = "dshuffle-series v1\ngroup: Z3\ncap: 3\nalphabet: X\nterm: x0*x[2] -1/2\nterm: 1 3\nterm: x[1] 2\n";
        let s = parse_series(text).unwrap();
        let out = emit_series(&s);
        assert_eq!(out, "dshuffle-series v1\ngroup: 3\ncap: 3\nalphabet: X\nterm: 1 3\nterm: x[1] 2\nterm: x0*x[2] -1/2\n");
        assert_eq!(parse_series(&out).unwrap(), s);
        let TypedSeries::X(x) = s else { panic!() };
        assert_eq!(x.coeff(&[XLetter::X0, XLetter::g(2)]), q(-1) / q(2));
    }

    #[test]
    fn y_document_rejects_trailing_x0() {
        let text = "dshuffle-series v1\ngroup: trivial\ncap: 3\nalphabet: Y\nterm: x[]*x0 1\n";
        let err = parse_series(text).unwrap_err();
        assert!(matches!(err, AlgebraError::Parse { ref position, .. } if position == "term 1"), "{err}");
    }

    #[test]
    fn y_document_accepts_x_spelling() {
        let a = parse_series("dshuffle-series v1\ngroup: Z2\ncap: 3\nalphabet: Y\nterm: x0*x[1] 1\n").unwrap();
        let b = parse_series("dshuffle-series v1\ngroup: Z2\ncap: 3\nalphabet: Y\nterm: y[2;1] 1\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_carry_positions() {
        let over = "dshuffle-series v1\ngroup: trivial\ncap: 1\nalphabet: X\nterm: x0 1\nterm: x0*x0 1\n";
        assert!(matches!(parse_series(over), Err(AlgebraError::Parse { position, .. }) if position == "term 2"));
        let coeff = "dshuffle-series v1\ngroup: trivial\ncap: 2\nalphabet: X\nterm: x0 1/0\n";
        assert!(matches!(parse_series(coeff), Err(AlgebraError::Parse { position, .. }) if position == "term 1"));
        let key = "dshuffle-series v1\ngroup: trivial\ncap: 2\nbogus: 1\n";
        assert!(matches!(parse_series(key), Err(AlgebraError::Parse { position, .. }) if position == "line 4"));
        assert!(parse_series("dshuffle-series v2\n").is_err());
    }

    #[test]
    fn v_round_trip() {
        let text = "dshuffle-series v1\ngroup: Z3\ncap: 2\nalphabet: V\nterm: x0@[2] 1\nterm: 1@[0] -2\n";
        let s = parse_series(text).unwrap();
        assert_eq!(parse_series(&emit_series(&s)).unwrap(), s);
    }
}
