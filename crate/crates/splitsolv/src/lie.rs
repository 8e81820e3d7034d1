//! Real Lie algebras given by structure equations on the dual, the catalog of
//! six-dimensional unimodular solvable algebras, and explicit basis changes.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::exterior::{degree, indices, masks_of_degree, Dga, Form, Mask};
use crate::matrix::ExactMatrix;
use crate::scalar::{fmt_rational, parse_rational, qi, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct RealLieAlgebra {
    pub dga: Dga<Rational>,
}

impl RealLieAlgebra {
    pub fn new(diff: Vec<Form<Rational>>) -> Result<Self> {
        for (k, f) in diff.iter().enumerate() {
            if f.terms.keys().any(|m| degree(*m) != 2 || *m >> diff.len() != 0) {
                return Err(Error::Dimension(format!("d e^{} is not a 2-form in dimension {}", k + 1, diff.len())));
            }
        }
        Ok(RealLieAlgebra { dga: Dga::new(diff) })
    }

    pub fn abelian(n: usize) -> Self {
        RealLieAlgebra { dga: Dga::new(vec![Form::zero(); n]) }
    }

    pub fn dim(&self) -> usize {
        self.dga.ngen()
    }

    pub fn diff(&self, k: usize) -> &Form<Rational> {
        &self.dga.dgen[k]
    }

    /// Coefficient of e^{ij} in d e^k (0-based, any order of i, j).
    pub fn coeff(&self, k: usize, i: usize, j: usize) -> Rational {
        if i == j {
            return Zero::zero();
        }
        let c = self.dga.dgen[k].coeff(1 << i | 1 << j);
        if i < j {
            c
        } else {
            -c
        }
    }

    pub fn jacobi_check(&self) -> bool {
        self.dga.d_squared_vanishes()
    }

    /// trace(ad_x) = 0 for every basis vector x.
    pub fn unimodular_check(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let tr = (0..n).fold(Rational::zero(), |acc, k| acc + self.coeff(k, i, k));
            tr.is_zero()
        })
    }

    pub fn ce_cohomology(&self) -> Vec<usize> {
        self.dga.betti()
    }

    pub fn is_nilpotent(&self) -> bool {
        // lower central series through the dual filtration: V_0 = 0,
        // V_{j+1} = {x : dx ∈ Λ²V_j}
        let n = self.dim();
        let mut known: Mask = 0;
        loop {
            let mut grew = false;
            for k in 0..n {
                if known >> k & 1 == 1 {
                    continue;
                }
                if self.diff(k).terms.keys().all(|m| m & !known == 0) {
                    known |= 1 << k;
                    grew = true;
                }
            }
            if !grew {
                return degree(known) == n;
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_salamon(text)
    }

    /// Structure equations after the change f = m·e.
    pub fn transform(&self, m: &BasisChange) -> Result<Self> {
        if m.matrix.rows() != self.dim() || m.matrix.cols() != self.dim() {
            return Err(Error::Dimension("basis change size differs from algebra dimension".into()));
        }
        Ok(RealLieAlgebra { dga: self.dga.change_basis(&m.matrix)? })
    }
}

fn render_coeff_term(c: &Rational, i: usize, j: usize, first: bool) -> String {
    let mut s = String::new();
    if c.is_negative() {
        s.push('-');
    } else if !first {
        s.push('+');
    }
    let a = c.abs();
    if a != qi(1) {
        s.push_str(&fmt_rational(&a));
        s.push('*');
    }
    s.push_str(&format!("e^{{{}{}}}", i + 1, j + 1));
    s
}

pub fn render_form_real(f: &Form<Rational>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    // order terms lexicographically by (i, j)
    let mut ts: Vec<(Vec<usize>, &Rational)> = f.terms.iter().map(|(m, c)| (indices(*m), c)).collect();
    ts.sort();
    for (k, (ix, c)) in ts.iter().enumerate() {
        out.push_str(&render_coeff_term(c, ix[0], ix[1], k == 0));
    }
    out
}

impl fmt::Display for RealLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots: Vec<String> = self.dga.dgen.iter().map(render_form_real).collect();
        write!(f, "({})", slots.join(", "))
    }
}

impl Serialize for RealLieAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---------------------------------------------------------------------------
// Salamon notation

struct Salamon<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Salamon<'a> {
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }
    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            parse_err(self.pos, format!("expected '{}'", c as char))
        }
    }
    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }
    fn rational(&mut self) -> Result<Rational> {
        self.ws();
        let at = self.pos;
        let n = self.digits();
        if n.is_empty() {
            return parse_err(at, "expected a number");
        }
        let mut txt = n.to_string();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.ws();
            let d = self.digits();
            if d.is_empty() {
                return parse_err(self.pos, "expected a denominator");
            }
            txt = format!("{}/{}", n, d);
        }
        parse_rational(&txt).map_err(|_| Error::Parse { pos: at, msg: "zero denominator".into() })
    }
    /// `[coeff "*"] "e^{" digit digit "}"`, also `(p/q)e^{ij}`.
    fn term(&mut self, sign: Rational) -> Result<(Rational, usize, usize, usize)> {
        let mut c = sign;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let neg = if self.peek() == Some(b'-') {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let r = self.rational()?;
                self.expect(b')')?;
                c *= if neg { -r } else { r };
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
            }
            Some(d) if d.is_ascii_digit() => {
                c *= self.rational()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else if self.peek() != Some(b'e') {
                    return parse_err(self.pos, "expected '*'");
                }
            }
            _ => {}
        }
        let at = self.pos;
        self.expect(b'e')?;
        self.expect(b'^')?;
        self.expect(b'{')?;
        self.ws();
        let p = self.pos;
        if p + 2 > self.s.len() || !self.s[p].is_ascii_digit() || !self.s[p + 1].is_ascii_digit() {
            return parse_err(p, "expected two index digits");
        }
        let i = (self.s[p] - b'0') as usize;
        let j = (self.s[p + 1] - b'0') as usize;
        self.pos += 2;
        self.expect(b'}')?;
        Ok((c, i, j, at))
    }
    fn slot(&mut self) -> Result<Vec<(Rational, usize, usize, usize)>> {
        let mut out = Vec::new();
        let mut sign = qi(1);
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = qi(-1);
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        // a lone "0"
        if self.peek() == Some(b'0') {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b',') | Some(b')')) {
                return Ok(out);
            }
            self.pos = save;
        }
        loop {
            out.push(self.term(sign)?);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = qi(1);
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = qi(-1);
                }
                _ => return Ok(out),
            }
        }
    }
}

/// Parse `(e^{23}, e^{34}, -e^{24},0,0,0)`. A term e^{ji} with j > i is read
/// as −e^{ij}.
pub fn parse_salamon(text: &str) -> Result<RealLieAlgebra> {
    let mut p = Salamon { s: text.as_bytes(), pos: 0 };
    p.expect(b'(')?;
    let mut slots = vec![p.slot()?];
    while p.peek() == Some(b',') {
        p.pos += 1;
        slots.push(p.slot()?);
    }
    p.expect(b')')?;
    if p.peek().is_some() {
        return parse_err(p.pos, "trailing input");
    }
    let n = slots.len();
    let mut diff = Vec::with_capacity(n);
    for slot in slots {
        let mut f = Form::zero();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (c, i, j, at) in slot {
            if i == 0 || j == 0 || i > n || j > n {
                return parse_err(at, format!("index out of range in e^{{{}{}}}", i, j));
            }
            if i == j {
                return parse_err(at, format!("repeated index in e^{{{}{}}}", i, j));
            }
            let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
            if seen.contains(&(a, b)) {
                return parse_err(at, format!("duplicate term e^{{{}{}}}", a, b));
            }
            seen.push((a, b));
            f.add_term(1 << (a - 1) | 1 << (b - 1), c);
        }
        diff.push(f);
    }
    RealLieAlgebra::new(diff)
}

// ---------------------------------------------------------------------------
// Catalog

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogLabel {
    S1,
    S2,
    S3,
    S4,
    S5(Rational),
    S6(Rational, Rational),
    S7(Rational),
    S8(Rational),
    S9,
    S10(Rational, Rational),
    S11(Rational),
    S12,
}

impl CatalogLabel {
    pub fn index(&self) -> usize {
        use CatalogLabel::*;
        match self {
            S1 => 1,
            S2 => 2,
            S3 => 3,
            S4 => 4,
            S5(_) => 5,
            S6(..) => 6,
            S7(_) => 7,
            S8(_) => 8,
            S9 => 9,
            S10(..) => 10,
            S11(_) => 11,
            S12 => 12,
        }
    }

    pub fn params(&self) -> Vec<Rational> {
        use CatalogLabel::*;
        match self {
            S5(a) | S7(a) | S8(a) | S11(a) => vec![a.clone()],
            S6(a, b) | S10(a, b) => vec![a.clone(), b.clone()],
            _ => vec![],
        }
    }

    /// Parameters inside the ranges of the classification theorem.
    pub fn check_range(&self) -> Result<()> {
        use CatalogLabel::*;
        let zero = Rational::zero();
        let one = qi(1);
        let ok = match self {
            S5(a) | S8(a) => *a > zero,
            S6(a, b) => *a > zero && *b > zero && *b < one,
            S7(a) => *a > zero && *a <= one,
            S10(a, _) => !a.is_zero(),
            S11(a) => *a > zero && *a < one,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{} is outside the catalog range", self)))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.strip_prefix('s').ok_or(Error::Parse { pos: 0, msg: "label must start with 's'".into() })?;
        let (k, rest) = match t.find('^') {
            Some(i) => (&t[..i], Some(&t[i + 1..])),
            None => (t, None),
        };
        let k: usize = k.parse().map_err(|_| Error::Parse { pos: 1, msg: "bad index".into() })?;
        let ps: Vec<Rational> = match rest {
            Some(r) => {
                let r = r.trim_start_matches('{').trim_end_matches('}');
                r.split(',').map(parse_rational).collect::<Result<_>>()?
            }
            None => vec![],
        };
        use CatalogLabel::*;
        let p = |i: usize| -> Result<Rational> { ps.get(i).cloned().ok_or(Error::Parse { pos: 0, msg: format!("s{} needs more parameters", k) }) };
        let want = match k {
            5 | 7 | 8 | 11 => 1,
            6 | 10 => 2,
            1..=12 => 0,
            _ => return parse_err(1, "index must be in 1..12"),
        };
        if ps.len() != want {
            return parse_err(0, format!("s{} takes {} parameters", k, want));
        }
        Ok(match k {
            1 => S1,
            2 => S2,
            3 => S3,
            4 => S4,
            5 => S5(p(0)?),
            6 => S6(p(0)?, p(1)?),
            7 => S7(p(0)?),
            8 => S8(p(0)?),
            9 => S9,
            10 => S10(p(0)?, p(1)?),
            11 => S11(p(0)?),
            _ => S12,
        })
    }
}

impl fmt::Display for CatalogLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params().iter().map(fmt_rational).collect();
        if ps.is_empty() {
            write!(f, "s{}", self.index())
        } else {
            write!(f, "s{}^{{{}}}", self.index(), ps.join(","))
        }
    }
}

impl Serialize for CatalogLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Structure equations with the given parameters, range checked.
pub fn catalog(label: &CatalogLabel) -> Result<RealLieAlgebra> {
    label.check_range()?;
    Ok(catalog_unchecked(label))
}

/// Structure equations for arbitrary real parameters.
pub fn catalog_unchecked(label: &CatalogLabel) -> RealLieAlgebra {
    use CatalogLabel::*;
    let r = |n: i64| qi(n);
    // (k, i, j, c): c·e^{ij} in slot k, 1-based
    let terms: Vec<(usize, usize, usize, Rational)> = match label {
        S1 => vec![(1, 2, 3, r(1)), (2, 3, 4, r(1)), (3, 2, 4, r(-1))],
        S2 => vec![(2, 1, 3, r(-1)), (3, 1, 2, r(1))],
        S3 => vec![(2, 1, 3, r(-1)), (3, 1, 2, r(1)), (5, 4, 6, r(-1)), (6, 4, 5, r(1))],
        S4 => vec![(1, 1, 5, r(1)), (2, 2, 5, r(-1)), (3, 3, 5, r(-1)), (4, 4, 5, r(1))],
        S5(a) => vec![(1, 1, 5, r(1)), (2, 2, 5, r(1)), (3, 3, 5, r(-1)), (3, 4, 5, a.clone()), (4, 3, 5, -a.clone()), (4, 4, 5, r(-1))],
        S6(a, b) => vec![
            (1, 1, 5, a.clone()),
            (1, 2, 5, r(1)),
            (2, 1, 5, r(-1)),
            (2, 2, 5, a.clone()),
            (3, 3, 5, -a.clone()),
            (3, 4, 5, b.clone()),
            (4, 3, 5, -b.clone()),
            (4, 4, 5, -a.clone()),
        ],
        S7(a) => vec![(1, 2, 5, r(1)), (2, 1, 5, r(-1)), (3, 4, 5, a.clone()), (4, 3, 5, -a.clone())],
        S8(a) => vec![
            (1, 1, 5, a.clone()),
            (1, 2, 5, r(1)),
            (2, 1, 5, r(-1)),
            (2, 2, 5, a.clone()),
            (3, 3, 5, -a.clone()),
            (3, 4, 5, r(1)),
            (4, 3, 5, r(-1)),
            (4, 4, 5, -a.clone()),
        ],
        S9 => vec![(1, 1, 6, r(-1)), (2, 2, 6, r(-1)), (3, 3, 6, r(1)), (3, 4, 5, r(-1)), (4, 3, 5, r(1)), (4, 4, 6, r(1))],
        S10(a, b) => vec![
            (1, 1, 5, r(1)),
            (1, 1, 6, b.clone()),
            (1, 2, 6, r(-1)),
            (2, 1, 6, r(1)),
            (2, 2, 5, r(1)),
            (2, 2, 6, b.clone()),
            (3, 3, 5, r(-1)),
            (3, 3, 6, -b.clone()),
            (3, 4, 5, -a.clone()),
            (4, 3, 5, a.clone()),
            (4, 4, 5, r(-1)),
            (4, 4, 6, -b.clone()),
        ],
        S11(a) => vec![
            (1, 1, 6, r(1)),
            (1, 2, 5, r(-1)),
            (2, 1, 5, r(1)),
            (2, 2, 6, r(1)),
            (3, 3, 6, r(-1)),
            (3, 4, 5, -a.clone()),
            (4, 3, 5, a.clone()),
            (4, 4, 6, r(-1)),
        ],
        S12 => vec![(1, 1, 6, r(1)), (1, 2, 5, r(-1)), (2, 1, 5, r(1)), (2, 2, 6, r(1)), (3, 3, 6, r(-1)), (3, 4, 5, r(1)), (4, 3, 5, r(-1)), (4, 4, 6, r(-1))],
    };
    let mut diff = vec![Form::zero(); 6];
    for (k, i, j, c) in terms {
        diff[k - 1].add_term(1 << (i - 1) | 1 << (j - 1), c);
    }
    RealLieAlgebra { dga: Dga::new(diff) }
}

pub fn all_catalog_indices() -> std::ops::RangeInclusive<usize> {
    1..=12
}

// ---------------------------------------------------------------------------
// Basis changes

/// New basis f = matrix · e.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasisChange {
    pub matrix: ExactMatrix<Rational>,
}

impl BasisChange {
    pub fn new(matrix: ExactMatrix<Rational>) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::Dimension("basis change must be square".into()));
        }
        if matrix.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(BasisChange { matrix })
    }

    pub fn identity(n: usize) -> Self {
        BasisChange { matrix: ExactMatrix::identity(n) }
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &BasisChange) -> BasisChange {
        BasisChange { matrix: next.matrix.mul(&self.matrix) }
    }

    pub fn inverse(&self) -> BasisChange {
        BasisChange { matrix: self.matrix.inverse().expect("basis change is invertible") }
    }

    /// f^a = ±c·e^b with (a, b, c), 1-based.
    fn from_entries(entries: &[(usize, usize, Rational)]) -> Self {
        let mut m = ExactMatrix::zeros(6, 6);
        for (a, b, c) in entries {
            m[(a - 1, b - 1)] = c.clone();
        }
        BasisChange::new(m).expect("appendix changes are invertible")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AppendixChange {
    ChA,
    ChB,
    ChC,
    ChD,
    ChE,
    ChF,
    ChG,
    ChH,
}

impl AppendixChange {
    pub const ALL: [AppendixChange; 8] = [
        AppendixChange::ChA,
        AppendixChange::ChB,
        AppendixChange::ChC,
        AppendixChange::ChD,
        AppendixChange::ChE,
        AppendixChange::ChF,
        AppendixChange::ChG,
        AppendixChange::ChH,
    ];

    pub fn needs_lambda(self) -> bool {
        matches!(self, AppendixChange::ChE | AppendixChange::ChH)
    }

    pub fn parse(s: &str) -> Result<Self> {
        AppendixChange::ALL
            .iter()
            .copied()
            .find(|c| format!("{:?}", c).eq_ignore_ascii_case(s.trim()))
            .ok_or(Error::Parse { pos: 0, msg: format!("unknown change '{}'", s) })
    }
}

impl fmt::Display for AppendixChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

pub fn appendix_change(name: AppendixChange, lambda: &Rational) -> Result<BasisChange> {
    use AppendixChange::*;
    if name.needs_lambda() && lambda.is_zero() {
        return Err(Error::OutOfRange(format!("{} needs a non-zero λ", name)));
    }
    let r = |n: i64| qi(n);
    let l = lambda.clone();
    let e: Vec<(usize, usize, Rational)> = match name {
        ChA => vec![(1, 1, r(1)), (2, 4, r(1)), (3, 3, r(1)), (4, 2, r(1)), (5, 5, r(1)), (6, 6, r(1))],
        ChB => vec![(1, 1, r(1)), (2, 2, r(1)), (3, 4, r(1)), (4, 3, r(1)), (5, 5, r(1)), (6, 6, r(1))],
        ChC => vec![(1, 1, r(1)), (2, 2, r(-1)), (3, 3, r(1)), (4, 4, r(-1)), (5, 5, r(-1)), (6, 6, r(1))],
        ChD => vec![(1, 1, r(1)), (2, 2, r(1)), (3, 3, r(1)), (4, 4, r(-1)), (5, 5, r(1)), (6, 6, r(1))],
        ChE => vec![(1, 3, r(1)), (2, 4, r(-1)), (3, 1, r(1)), (4, 2, r(-1)), (5, 5, -l), (6, 6, r(1))],
        ChF => vec![(1, 5, r(-1)), (2, 2, r(1)), (3, 1, r(1)), (4, 4, r(1)), (5, 3, r(1)), (6, 6, r(1))],
        ChG => vec![(1, 3, r(1)), (2, 4, r(1)), (3, 1, r(1)), (4, 2, r(1)), (5, 5, r(1)), (6, 6, r(1))],
        ChH => vec![(1, 3, r(1)), (2, 4, r(1)), (3, 1, r(1)), (4, 2, r(1)), (5, 5, l), (6, 6, r(-1))],
    };
    Ok(BasisChange::from_entries(&e))
}

/// True iff transporting `src` through `m` gives exactly the equations of `tgt`.
pub fn verify_isomorphism(src: &RealLieAlgebra, tgt: &RealLieAlgebra, m: &BasisChange) -> Result<bool> {
    if src.dim() != tgt.dim() || m.matrix.rows() != src.dim() {
        return Err(Error::Dimension(format!("algebras of dimension {} and {} with a {}×{} change", src.dim(), tgt.dim(), m.matrix.rows(), m.matrix.cols())));
    }
    Ok(src.transform(m)? == *tgt)
}

/// Matrix of d on Λ^k, for inspection.
pub fn ce_matrix(g: &RealLieAlgebra, k: usize) -> ExactMatrix<Rational> {
    let n = g.dim();
    g.dga.matrix(&masks_of_degree(n, k), &masks_of_degree(n, k + 1))
}

/// Nijenhuis tensor of an endomorphism J of g. Entry `[i][j]` is the vector
/// N(e_i, e_j) in the basis e_1..e_n, with the bracket [e_i, e_j] = −Σ_k c^k_{ij} e_k.
pub fn nijenhuis(j: &ExactMatrix<Rational>, g: &RealLieAlgebra) -> Result<Vec<Vec<Vec<Rational>>>> {
    let n = g.dim();
    if j.rows() != n || j.cols() != n {
        return Err(Error::Dimension("J must be n×n".into()));
    }
    if j.mul(j) != ExactMatrix::identity(n).scale(&qi(-1)) {
        return Err(Error::NotComplexStructure);
    }
    let bracket = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if y[b].is_zero() || a == b {
                    continue;
                }
                let s = x[a].clone() * y[b].clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = g.coeff(k, a, b);
                    if !c.is_zero() {
                        *o = o.clone() - s.clone() * c;
                    }
                }
            }
        }
        out
    };
    let add = |x: Vec<Rational>, y: Vec<Rational>| -> Vec<Rational> { x.into_iter().zip(y).map(|(a, b)| a + b).collect() };
    let neg = |x: Vec<Rational>| -> Vec<Rational> { x.into_iter().map(|a| -a).collect() };
    let mut out = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let ea: Vec<Rational> = (0..n).map(|k| if k == a { qi(1) } else { Rational::zero() }).collect();
            let eb: Vec<Rational> = (0..n).map(|k| if k == b { qi(1) } else { Rational::zero() }).collect();
            let jx = j.mul_vec(&ea);
            let jy = j.mul_vec(&eb);
            // N(x,y) = [Jx,Jy] − J[Jx,y] − J[x,Jy] − [x,y]
            let t1 = bracket(&jx, &jy);
            let t2 = j.mul_vec(&bracket(&jx, &eb));
            let t3 = j.mul_vec(&bracket(&ea, &jy));
            let t4 = bracket(&ea, &eb);
            out[a][b] = add(add(t1, neg(t2)), add(neg(t3), neg(t4)));
        }
    }
    Ok(out)
}

pub fn nijenhuis_vanishes(j: &ExactMatrix<Rational>, g: &RealLieAlgebra) -> Result<bool> {
    Ok(nijenhuis(j, g)?.iter().flatten().flatten().all(|x| x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn parse_examples() {
        let s1 = parse_salamon("(e^{23}, e^{34}, -e^{24},0,0,0)").unwrap();
        assert_eq!(s1, catalog(&CatalogLabel::S1).unwrap());
        assert_eq!(parse_salamon("(0,0,0,0,0,0)").unwrap(), RealLieAlgebra::abelian(6));
        let h = parse_salamon("(0,0,0,0,0,e^{12})").unwrap();
        assert_eq!(h.coeff(5, 0, 1), qi(1));
        assert!(h.is_nilpotent());
        let s7 = parse_salamon("(e^{25}, -e^{15}, (1/2)e^{45}, -(1/2)e^{35},0,0)").unwrap();
        assert_eq!(s7, catalog(&CatalogLabel::S7(q(1, 2))).unwrap());
        assert_eq!(parse_salamon("(e^{21},0)").unwrap().coeff(0, 0, 1), qi(-1));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_salamon("(e^{23}, 0").is_err());
        assert!(parse_salamon("(e^{27},0,0)").is_err());
        assert!(parse_salamon("(e^{23}+e^{23},0,0)").is_err());
        assert!(parse_salamon("(e^{23}+e^{32},0,0)").is_err());
        assert!(parse_salamon("(2 e^{23},0,0)").is_ok());
        assert!(parse_salamon("(x,0,0)").is_err());
    }

    #[test]
    fn render_round_trip() {
        let s = catalog(&CatalogLabel::S10(q(-3, 2), q(2, 5))).unwrap();
        let txt = s.to_string();
        assert_eq!(parse_salamon(&txt).unwrap(), s);
        assert_eq!(catalog(&CatalogLabel::S12).unwrap().to_string(), "(e^{16}-e^{25}, e^{15}+e^{26}, -e^{36}+e^{45}, -e^{35}-e^{46}, 0, 0)");
    }

    #[test]
    fn jacobi_and_unimodular() {
        // e³ acts on span{e¹, e²}; d² vanishes on every generator
        assert!(parse_salamon("(e^{23}, e^{13}, 0, 0, 0, 0)").unwrap().jacobi_check());
        assert!(!parse_salamon("(e^{23}, e^{45}, 0, 0, 0)").unwrap().jacobi_check());
        assert!(!parse_salamon("(e^{12}, 0)").unwrap().unimodular_check());
        assert!(RealLieAlgebra::abelian(6).unimodular_check());
    }

    #[test]
    fn ce_examples() {
        assert_eq!(RealLieAlgebra::abelian(6).ce_cohomology(), vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(catalog(&CatalogLabel::S12).unwrap().ce_cohomology()[1], 2);
        assert_eq!(parse_salamon("(0,0,0,0,0,e^{12})").unwrap().ce_cohomology()[1], 5);
    }

    #[test]
    fn ranges() {
        assert!(catalog(&CatalogLabel::S6(qi(1), q(3, 2))).is_err());
        assert!(catalog(&CatalogLabel::S7(qi(1))).is_ok());
        assert!(catalog(&CatalogLabel::S11(qi(1))).is_err());
        assert!(appendix_change(AppendixChange::ChE, &qi(0)).is_err());
    }

    #[test]
    fn appendix_matrices() {
        let a = appendix_change(AppendixChange::ChA, &qi(0)).unwrap();
        assert_eq!(a.matrix[(1, 3)], qi(1));
        assert_eq!(a.matrix[(3, 1)], qi(1));
        let d = appendix_change(AppendixChange::ChD, &qi(0)).unwrap();
        assert_eq!(d.matrix, ExactMatrix::diag(vec![qi(1), qi(1), qi(1), qi(-1), qi(1), qi(1)]));
    }

    #[test]
    fn label_text() {
        for l in [CatalogLabel::S6(q(1, 2), q(1, 3)), CatalogLabel::S12, CatalogLabel::S11(q(1, 7))] {
            assert_eq!(CatalogLabel::parse(&l.to_string()).unwrap(), l);
        }
    }
}
