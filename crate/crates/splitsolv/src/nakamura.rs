//! Splitting-type structures J_C on the Nakamura algebra s12: characters,
//! their restriction to the lattice Γ'_C, the finite complexes B_Γ and
//! C_Γ = B_Γ + conj(B_Γ) (also for the deformations J_{C,t}), and the
//! moduli and deformation statements around them.

use serde::Serialize;

use crate::classify::classify;
use crate::coframe::{bidegree, conj_form, omega, CForm, Coframe, SplittingParams};
use crate::double_complex::{Cell, CohomologyTable, DoubleComplex, Theory};
use crate::error::{Error, Result};
use crate::exterior::{Form, Mask};
use crate::lie::CatalogLabel;
use crate::matrix::ExactMatrix;
use crate::scalar::{Field, GaussianRational, Rational};

type G = GaussianRational;
type M = ExactMatrix<G>;

fn gz(x: &G) -> bool {
    Field::is_zero(x)
}

fn real(r: Rational) -> G {
    G::real(r)
}

/// z ↦ exp(a·z₃ + b·z̄₃).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Character {
    pub a: G,
    pub b: G,
}

impl Character {
    pub fn new(a: G, b: G) -> Self {
        Character { a, b }
    }

    pub fn trivial() -> Self {
        Character { a: G::zero(), b: G::zero() }
    }

    pub fn mul(&self, o: &Character) -> Character {
        Character { a: self.a.clone() + o.a.clone(), b: self.b.clone() + o.b.clone() }
    }

    pub fn inv(&self) -> Character {
        Character { a: -self.a.clone(), b: -self.b.clone() }
    }

    /// The pointwise complex conjugate.
    pub fn conj(&self) -> Character {
        Character { a: self.b.conj(), b: self.a.conj() }
    }

    pub fn is_unitary(&self) -> bool {
        self.b == -self.a.conj()
    }

    pub fn is_trivial(&self) -> bool {
        gz(&self.a) && gz(&self.b)
    }
}

/// The exponent `pi·π + l·L` with L = log((3+√5)/2). π and L are taken to be
/// linearly independent over ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicExponent {
    pub pi: G,
    pub l: G,
}

impl SymbolicExponent {
    /// exp of the exponent equals 1.
    pub fn is_trivial(&self) -> bool {
        if !gz(&self.l) || !num_traits::Zero::is_zero(&self.pi.re) {
            return false;
        }
        let half = &self.pi.im / Rational::from_i64(2);
        half.is_integer()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Characters {
    pub alpha1: Character,
    pub alpha2: Character,
    pub beta1: Character,
    pub beta2: Character,
    pub gamma1: Character,
    pub gamma2: Character,
}

fn check_c(c: &G) -> Result<()> {
    if num_traits::Zero::is_zero(&c.im) {
        return Err(Error::OutOfRange(format!("Im C must be nonzero, got C = {c}")));
    }
    Ok(())
}

pub fn characters(c: &G) -> Result<Characters> {
    check_c(c)?;
    let i = G::i();
    let alpha1 = Character::new(-(c.clone() - i.clone()), -(c.clone() + i.clone()));
    let beta1 = Character::new(c.conj() - i.clone(), -(c.clone() + i.clone()));
    let gamma1 = Character::new(c.clone() - i.clone(), -(c.conj() + i));
    Ok(Characters { alpha2: alpha1.inv(), beta2: beta1.inv(), gamma2: gamma1.inv(), alpha1, beta1, gamma1 })
}

/// Values of the exponent a·z + b·z̄ at the two generators of
/// Γ'_C = (π/(2 Im C))(1 − i Re C)ℤ ⊕ (i/2)Lℤ.
pub fn lattice_exponents(ch: &Character, c: &G) -> Result<[SymbolicExponent; 2]> {
    check_c(c)?;
    let two_d = Rational::from_i64(2) * c.im.clone();
    let w1 = G::new(Rational::from_i64(1) / two_d.clone(), -c.re.clone() / two_d);
    let w2 = G::new(Rational::from_i64(0), Rational::new(1.into(), 2.into()));
    let at = |w: &G| ch.a.clone() * w.clone() + ch.b.clone() * w.conj();
    Ok([SymbolicExponent { pi: at(&w1), l: G::zero() }, SymbolicExponent { pi: G::zero(), l: at(&w2) }])
}

pub fn char_restriction_trivial(ch: &Character, c: &G) -> Result<bool> {
    Ok(lattice_exponents(ch, c)?.iter().all(|e| e.is_trivial()))
}

/// C = i/k for a nonzero integer k.
pub fn is_i_over_k(c: &G) -> bool {
    num_traits::Zero::is_zero(&c.re) && !num_traits::Zero::is_zero(&c.im) && (Rational::from_i64(1) / c.im.clone()).is_integer()
}

/// C = i/(2k+1).
pub fn is_i_over_odd(c: &G) -> bool {
    if !is_i_over_k(c) {
        return false;
    }
    let k = (Rational::from_i64(1) / c.im.clone()).to_integer();
    k % 2 != num_bigint::BigInt::from(0)
}

// ---------------------------------------------------------------------------
// Forms with character coefficients.

/// Σ exp(χ)·f with f a constant-coefficient form in the frame
/// θ = (dz₁, dz₂, dz₃ + t dz̄₃, dz̄₁, dz̄₂, dz̄₃ + t̄ dz₃), laid out as a
/// three-dimensional coframe (generator i+3 is the conjugate of i).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct CharacterForm {
    pub terms: Vec<(Character, CForm)>,
}

impl CharacterForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(ch: Character, f: CForm) -> Self {
        let mut r = Self::zero();
        r.push(ch, f);
        r
    }

    pub fn constant(f: CForm) -> Self {
        Self::new(Character::trivial(), f)
    }

    fn push(&mut self, ch: Character, f: CForm) {
        if f.is_zero() {
            return;
        }
        if let Some(k) = self.terms.iter().position(|(c, _)| *c == ch) {
            let s = self.terms[k].1.add(&f);
            if s.is_zero() {
                self.terms.remove(k);
            } else {
                self.terms[k].1 = s;
            }
        } else {
            self.terms.push((ch, f));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (c, f) in &o.terms {
            r.push(c.clone(), f.clone());
        }
        r
    }

    pub fn scale(&self, s: &G) -> Self {
        let mut r = Self::zero();
        for (c, f) in &self.terms {
            r.push(c.clone(), f.scale(s));
        }
        r
    }

    pub fn times(&self, ch: &Character) -> Self {
        CharacterForm { terms: self.terms.iter().map(|(c, f)| (c.mul(ch), f.clone())).collect() }
    }

    pub fn wedge(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (c1, f1) in &self.terms {
            for (c2, f2) in &o.terms {
                r.push(c1.mul(c2), f1.wedge(f2));
            }
        }
        r
    }

    pub fn conj(&self) -> Self {
        let mut r = Self::zero();
        for (c, f) in &self.terms {
            r.push(c.conj(), conj_form(3, f));
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The (p,q) component.
    pub fn part(&self, p: usize, q: usize) -> Self {
        let mut r = Self::zero();
        for (c, f) in &self.terms {
            r.push(c.clone(), f.filter(|m| bidegree(3, m) == (p, q)));
        }
        r
    }

    /// The single (character, monomial, coefficient) of a monomial form.
    pub fn as_monomial(&self) -> Option<(Character, Mask, G)> {
        match self.terms.as_slice() {
            [(c, f)] if f.terms.len() == 1 => {
                let (m, x) = f.terms.iter().next().unwrap();
                Some((c.clone(), *m, x.clone()))
            }
            _ => None,
        }
    }
}

/// Exterior derivative for the frame with deformation parameter t.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    pub t: G,
}

impl Frame {
    pub fn new(t: G) -> Result<Self> {
        if t.norm_sqr() == Rational::from_i64(1) {
            return Err(Error::OutOfRange("|t| = 1".into()));
        }
        Ok(Frame { t })
    }

    /// d exp(a z + b z̄) / exp(...) = a dz₃ + b dz̄₃ written in θ₃, θ̄₃.
    pub fn dlog(&self, ch: &Character) -> CForm {
        let den = G::one() - real(self.t.norm_sqr());
        let c3 = (ch.a.clone() - ch.b.clone() * self.t.conj()) / den.clone();
        let cb3 = (ch.b.clone() - ch.a.clone() * self.t.clone()) / den;
        Form::mono(1 << 2, c3).add(&Form::mono(1 << 5, cb3))
    }

    pub fn d(&self, f: &CharacterForm) -> CharacterForm {
        let mut r = CharacterForm::zero();
        for (c, g) in &f.terms {
            r.push(c.clone(), self.dlog(c).wedge(g));
        }
        r
    }
}

// ---------------------------------------------------------------------------
// Generators and complexes.

/// Building blocks of the generators, in label order. `Bt` is the conjugate
/// of a tilde generator and `B` the conjugate of a plain one; φ̃³ = φ̄³ is `B(3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    Bt(u8),
    P(u8),
    T(u8),
    B(u8),
}

impl Token {
    pub const ALL: [Token; 10] =
        [Token::Bt(1), Token::Bt(2), Token::P(1), Token::P(2), Token::P(3), Token::T(1), Token::T(2), Token::B(1), Token::B(2), Token::B(3)];

    pub fn name(self) -> String {
        match self {
            Token::Bt(i) => format!("bt{i}"),
            Token::P(i) => format!("{i}"),
            Token::T(i) => format!("t{i}"),
            Token::B(i) => format!("b{i}"),
        }
    }

    pub fn parse(s: &str) -> Option<Token> {
        Token::ALL.into_iter().find(|t| t.name() == s)
    }

    pub fn is_holomorphic(self) -> bool {
        matches!(self, Token::Bt(_) | Token::P(_))
    }

    pub fn conj(self) -> Token {
        match self {
            Token::Bt(i) => Token::T(i),
            Token::T(i) => Token::Bt(i),
            Token::P(i) => Token::B(i),
            Token::B(i) => Token::P(i),
        }
    }
}

pub fn label_of(tokens: &[Token]) -> String {
    if tokens.is_empty() {
        return "1".into();
    }
    format!("phi^{{{}}}", tokens.iter().map(|t| t.name()).collect::<Vec<_>>().join(" "))
}

/// Inverse of `label_of`; tokens are sorted into label order.
pub fn parse_label(s: &str) -> Result<Vec<Token>> {
    let s = s.trim();
    if s == "1" {
        return Ok(vec![]);
    }
    let inner =
        s.strip_prefix("phi^{").and_then(|r| r.strip_suffix('}')).ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected phi^{{...}}, got '{s}'") })?;
    let mut out = Vec::new();
    for w in inner.split_whitespace() {
        out.push(Token::parse(w).ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown generator '{w}'") })?);
    }
    let mut sorted = out.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != out.len() {
        return Err(Error::Parse { pos: 0, msg: format!("repeated generator in '{s}'") });
    }
    Ok(sorted)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NakamuraParams {
    pub c: G,
    pub t: G,
}

impl NakamuraParams {
    pub fn new(c: G, t: G) -> Result<Self> {
        check_c(&c)?;
        if t.norm_sqr() == Rational::from_i64(1) {
            return Err(Error::OutOfRange("|t| must differ from 1".into()));
        }
        if !gz(&t) && !is_i_over_odd(&c) {
            return Err(Error::OutOfRange(format!("deformations are built for C = i/(2k+1) only, got C = {c}")));
        }
        Ok(NakamuraParams { c, t })
    }
}

/// A basis element of one of the complexes.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub tokens: Vec<Token>,
    pub label: String,
    pub form: CharacterForm,
}

#[derive(Clone, Debug)]
pub struct NakamuraComplexes {
    pub params: NakamuraParams,
    pub b: DoubleComplex,
    pub c: DoubleComplex,
    pub b_gens: Vec<Vec<Generator>>,
    pub c_gens: Vec<Vec<Generator>>,
    frame: Frame,
}

fn cell_index(p: usize, q: usize) -> usize {
    p * 4 + q
}

fn token_forms(params: &NakamuraParams) -> Result<Vec<(Token, CharacterForm)>> {
    let ch = characters(&params.c)?;
    let theta = |i: usize| CharacterForm::constant(Form::mono(1 << i, G::one()));
    let w1 = theta(0).times(&ch.alpha1.inv());
    let w2 = theta(1).times(&ch.alpha2.inv());
    let p1 = w1.times(&ch.beta1);
    let p2 = w2.times(&ch.beta2);
    let t1 = w1.conj().times(&ch.gamma1);
    let t2 = w2.conj().times(&ch.gamma2);
    let mut out = vec![(Token::P(1), p1), (Token::P(2), p2), (Token::P(3), theta(2)), (Token::T(1), t1), (Token::T(2), t2), (Token::B(3), theta(5))];
    for k in [0usize, 1, 3, 4] {
        let (tok, f) = out[k].clone();
        out.push((tok.conj(), f.conj()));
    }
    out.sort_by_key(|(t, _)| *t);
    Ok(out)
}

/// The unitary character deciding membership of φ^I∧φ̃^J in B.
fn unitary_weight(ch: &Characters, tokens: &[Token]) -> Character {
    let mut w = Character::trivial();
    for t in tokens {
        let f = match t {
            Token::P(1) => &ch.beta1,
            Token::P(2) => &ch.beta2,
            Token::T(1) => &ch.gamma1,
            Token::T(2) => &ch.gamma2,
            _ => continue,
        };
        w = w.mul(f);
    }
    w
}

fn subsets(items: &[Token]) -> Vec<Vec<Token>> {
    (0u32..1 << items.len()).map(|m| (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect()).collect()
}

fn generator(forms: &[(Token, CharacterForm)], tokens: Vec<Token>) -> Generator {
    let mut f = CharacterForm::constant(Form::constant(G::one()));
    for t in &tokens {
        let g = &forms.iter().find(|(x, _)| x == t).unwrap().1;
        f = f.wedge(g);
    }
    Generator { label: label_of(&tokens), tokens, form: f }
}

fn bideg(tokens: &[Token]) -> (usize, usize) {
    let p = tokens.iter().filter(|t| t.is_holomorphic()).count();
    (p, tokens.len() - p)
}

/// Coordinates of a form in a monomial basis; `None` if it leaves the span.
fn project(f: &CharacterForm, basis: &[Generator]) -> Option<Vec<G>> {
    let keys: Vec<(Character, Mask, G)> = basis.iter().map(|g| g.form.as_monomial().expect("monomial generator")).collect();
    let mut v = vec![G::zero(); basis.len()];
    for (c, g) in &f.terms {
        for (m, x) in &g.terms {
            let k = keys.iter().position(|(kc, km, _)| kc == c && km == m)?;
            v[k] = v[k].clone() + x.clone() / keys[k].2.clone();
        }
    }
    Some(v)
}

fn matrix_into(frame: &Frame, src: &[Generator], dst: &[Generator], p: usize, q: usize) -> Result<M> {
    let mut cols = Vec::new();
    for g in src {
        let d = frame.d(&g.form).part(p, q);
        let v = project(&d, dst).ok_or_else(|| Error::Internal(format!("d({}) leaves the complex in bidegree ({p},{q})", g.label)))?;
        cols.push(v);
    }
    Ok(M::from_fn(dst.len(), src.len(), |i, j| cols[j][i].clone()))
}

fn assemble(frame: &Frame, gens: &[Vec<Generator>]) -> Result<DoubleComplex> {
    let empty: Vec<Generator> = Vec::new();
    let at = |p: usize, q: usize| if p <= 3 && q <= 3 { &gens[cell_index(p, q)] } else { &empty };
    let mut cells = Vec::new();
    let mut conj = Vec::new();
    for p in 0..=3 {
        for q in 0..=3 {
            let src = at(p, q);
            let del = matrix_into(frame, src, at(p + 1, q), p + 1, q)?;
            let delbar = matrix_into(frame, src, at(p, q + 1), p, q + 1)?;
            let images: Option<Vec<Vec<G>>> = src.iter().map(|g| project(&g.form.conj(), at(q, p))).collect();
            conj.push(images.map(|cols| M::from_fn(at(q, p).len(), src.len(), |i, j| cols[j][i].clone())));
            cells.push(Cell { labels: src.iter().map(|g| g.label.clone()).collect(), del, delbar });
        }
    }
    DoubleComplex::new(3, cells, Some(conj))
}

pub fn build_complexes(params: &NakamuraParams) -> Result<NakamuraComplexes> {
    let params = NakamuraParams::new(params.c.clone(), params.t.clone())?;
    let frame = Frame::new(params.t.clone())?;
    let forms = token_forms(&params)?;
    let ch = characters(&params.c)?;
    let hol = [Token::P(1), Token::P(2), Token::P(3)];
    let anti = [Token::T(1), Token::T(2), Token::B(3)];
    let mut b_gens: Vec<Vec<Generator>> = vec![Vec::new(); 16];
    for i in subsets(&hol) {
        for j in subsets(&anti) {
            let tokens: Vec<Token> = i.iter().chain(j.iter()).copied().collect();
            if !char_restriction_trivial(&unitary_weight(&ch, &tokens), &params.c)? {
                continue;
            }
            let g = generator(&forms, tokens);
            b_gens[cell_index(i.len(), j.len())].push(g);
        }
    }
    for cell in &mut b_gens {
        cell.sort_by(|a, b| a.tokens.cmp(&b.tokens));
    }
    let mut c_gens = b_gens.clone();
    for p in 0..=3 {
        for q in 0..=3 {
            let mut extra = Vec::new();
            for g in &b_gens[cell_index(q, p)] {
                let mut tokens: Vec<Token> = g.tokens.iter().map(|t| t.conj()).collect();
                tokens.sort();
                debug_assert_eq!(bideg(&tokens), (p, q));
                let cand = generator(&forms, tokens);
                let (c, m, _) = cand.form.as_monomial().expect("monomial generator");
                let present = c_gens[cell_index(p, q)].iter().chain(extra.iter()).any(|h: &Generator| {
                    let (hc, hm, _) = h.form.as_monomial().unwrap();
                    hc == c && hm == m
                });
                if !present {
                    extra.push(cand);
                }
            }
            c_gens[cell_index(p, q)].extend(extra);
        }
    }
    let b = assemble(&frame, &b_gens)?;
    let c = assemble(&frame, &c_gens)?;
    Ok(NakamuraComplexes { params, b, c, b_gens, c_gens, frame })
}

impl NakamuraComplexes {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Dolbeault from B, Bott-Chern, Aeppli and de Rham from C.
    pub fn cohomology(&self, theory: Theory) -> CohomologyTable {
        match theory {
            Theory::Dolbeault => self.b.cohomology(theory),
            _ => self.c.cohomology(theory),
        }
    }

    /// The complex in which representatives of the theory live.
    pub fn complex_for(&self, theory: Theory) -> &DoubleComplex {
        match theory {
            Theory::Dolbeault => &self.b,
            _ => &self.c,
        }
    }

    pub fn verify_representatives(&self, theory: Theory, p: usize, q: usize, labels: &[&str]) -> Result<bool> {
        let dc = self.complex_for(theory);
        let mut forms = Vec::new();
        for l in labels {
            let tokens = parse_label(l)?;
            if bideg(&tokens) != (p, q) {
                return Err(Error::Dimension(format!("{l} is not of bidegree ({p},{q})")));
            }
            forms.push(vec![(label_of(&tokens), G::one())]);
        }
        dc.verify_representatives(theory, p, q, &forms)
    }
}

// ---------------------------------------------------------------------------
// Coframes.

/// dω¹ = −(C−i)ω^{13} − (C+i)ω^{13̄}, dω² = (C−i)ω^{23} + (C+i)ω^{23̄}, dω³ = 0.
pub fn jc_coframe(c: &G) -> Result<Coframe> {
    check_c(c)?;
    let i = G::i();
    let (m, p) = (c.clone() - i.clone(), c.clone() + i);
    Coframe::new(
        3,
        vec![omega(3, &[1, 3], &[], -m.clone()).add(&omega(3, &[1], &[3], -p.clone())), omega(3, &[2, 3], &[], m).add(&omega(3, &[2], &[3], p)), Form::zero()],
    )
}

/// Splitting parameters of J_C and the factor μ with ω'³ = μω³ turning the
/// J_C equations into the reduced ones.
pub fn jc_splitting(c: &G) -> Result<(SplittingParams, G)> {
    check_c(c)?;
    let i = G::i();
    if *c == -i.clone() {
        let mu = i.clone() + i;
        return Ok((SplittingParams::c2(G::one(), G::zero(), 0), mu));
    }
    let mu = c.conj() - i.clone();
    let a = -(c.clone() - i) / mu.clone();
    Ok((SplittingParams::c2(a, -G::one(), 1), mu))
}

/// Coefficients (x, y) with dω¹_{t} = x ω^{13}_t + y ω^{13̄}_t for ω³_t = ω³ + tω̄³,
/// x = −((C−i) − (C+i)t̄)/(1−|t|²), y = −((C+i) − (C−i)t)/(1−|t|²).
pub fn deformed_jc_coefficients(c: &G, t: &G) -> (G, G) {
    let i = G::i();
    let den = G::one() - real(t.norm_sqr());
    let (m, p) = (c.clone() - i.clone(), c.clone() + i);
    let x = -(m.clone() - p.clone() * t.conj()) / den.clone();
    let y = -(p - m * t.clone()) / den;
    (x, y)
}

/// J_C deformed by ω³ ↦ ω³ + tω̄³.
pub fn deformed_jc_coframe(c: &G, t: &G) -> Result<Coframe> {
    if t.norm_sqr() == Rational::from_i64(1) {
        return Err(Error::OutOfRange("|t| = 1".into()));
    }
    let p = M::identity(3);
    let mut qm = M::zeros(3, 3);
    qm[(2, 2)] = t.clone();
    jc_coframe(c)?.deform(&p, &qm)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NakamuraFamily {
    /// complex-parallelizable
    I,
    /// J_A, |A| ≠ 1
    II,
    /// J_B, |B| < 1
    III,
}

pub fn family_coframe(family: NakamuraFamily, param: &G) -> Result<Coframe> {
    let one = G::one();
    let dw = match family {
        NakamuraFamily::I => vec![omega(3, &[1, 3], &[], -one.clone()), omega(3, &[2, 3], &[], one), Form::zero()],
        NakamuraFamily::II => {
            if param.norm_sqr() == Rational::from_i64(1) {
                return Err(Error::OutOfRange("family (ii) needs |A| ≠ 1".into()));
            }
            vec![
                omega(3, &[1, 3], &[], param.clone()).add(&omega(3, &[1], &[3], -one.clone())),
                omega(3, &[2, 3], &[], -param.clone()).add(&omega(3, &[2], &[3], one)),
                Form::zero(),
            ]
        }
        NakamuraFamily::III => family_iii(param),
    };
    Coframe::new(3, dw)
}

fn family_iii(b: &G) -> Vec<CForm> {
    let one = G::one();
    vec![
        omega(3, &[1, 3], &[], -one.clone()).add(&omega(3, &[1], &[3], b.clone())),
        omega(3, &[2, 3], &[], -b.conj()).add(&omega(3, &[2], &[3], one)),
        Form::zero(),
    ]
}

/// dim H^{3,0}_∂̄ of the invariant complex.
pub fn moduli_invariant(family: NakamuraFamily, param: &G) -> Result<usize> {
    if family == NakamuraFamily::III && param.norm_sqr() >= Rational::from_i64(1) {
        return Err(Error::OutOfRange("family (iii) needs |B| < 1".into()));
    }
    let dc = DoubleComplex::from_coframe(&family_coframe(family, param)?)?;
    Ok(dc.cohomology(Theory::Dolbeault).get(3, 0))
}

/// The change τ¹ = ω², τ² = ω¹, τ³ = B̄ω³ taking J_B to J_{1/B}.
pub fn equivalence_witness_jb(b: &G) -> Result<M> {
    if gz(b) {
        return Err(Error::OutOfRange("B must be nonzero".into()));
    }
    let mut p = M::zeros(3, 3);
    p[(0, 1)] = G::one();
    p[(1, 0)] = G::one();
    p[(2, 2)] = b.conj();
    let from = Coframe::new(3, family_iii(b))?;
    let to = Coframe::new(3, family_iii(&b.inv()))?;
    if from.change(&p)? != to {
        return Err(Error::Internal("the change does not map J_B to J_{1/B}".into()));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeformationReport {
    pub t: G,
    pub equations: Vec<String>,
    pub integrable: bool,
    pub matches_display: bool,
    pub canonical_trivial: bool,
    /// coefficient of ω_t^{1231̄} in dω_t^{123}
    pub top_coefficient: G,
    /// dimension of the closed forms in span{ω_t¹, ω_t², ω_t³}
    pub closed_10_forms: usize,
}

/// The abelian structure J₀ deformed by ω³_t = ω³ − tω̄¹.
pub fn defnak_family(t: &G) -> Result<DeformationReport> {
    if t.norm_sqr() >= Rational::from_i64(1) {
        return Err(Error::OutOfRange("|t| must be < 1".into()));
    }
    let j0 = family_coframe(NakamuraFamily::II, &G::zero())?;
    let mut qm = M::zeros(3, 3);
    qm[(2, 0)] = -t.clone();
    let cf = j0.deform(&M::identity(3), &qm)?;
    let one = G::one();
    let display = vec![omega(3, &[1], &[3], -one.clone()), omega(3, &[1, 2], &[], -t.conj()).add(&omega(3, &[2], &[3], one)), omega(3, &[3], &[1], -t.clone())];
    let top = CForm::mono(0b111, G::one());
    let dtop = cf.d(&top);
    let top_coefficient = omega(3, &[1, 2, 3], &[1], G::one()).terms.iter().next().map(|(m, s)| dtop.coeff(*m) * s.clone()).unwrap();
    let dmat = M::from_fn(15, 3, |r, j| {
        let masks = crate::exterior::masks_of_degree(6, 2);
        cf.dw[j].coeff(masks[r])
    });
    Ok(DeformationReport {
        t: t.clone(),
        equations: cf.render().lines().map(str::to_string).collect(),
        integrable: cf.integrable(),
        matches_display: cf.dw == display,
        canonical_trivial: cf.canonical_trivial(),
        top_coefficient,
        closed_10_forms: 3 - dmat.rank(),
    })
}

// ---------------------------------------------------------------------------
// Tables.

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    #[serde(rename = "C")]
    pub c: G,
    pub t: G,
    pub theory: Theory,
    /// (p,q), or (k, 0) with `total: true` for de Rham
    pub bidegree: (usize, usize),
    pub total: bool,
    pub dim: usize,
    /// generators of the complex in this bidegree
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NakamuraReport {
    pub rows: Vec<ReportRow>,
}

impl NakamuraReport {
    pub fn get(&self, c: &G, t: &G, theory: Theory, p: usize, q: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.c == *c && r.t == *t && r.theory == theory && !r.total && r.bidegree == (p, q)).map(|r| r.dim)
    }

    pub fn betti(&self, c: &G, t: &G, k: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.c == *c && r.t == *t && r.total && r.bidegree.0 == k).map(|r| r.dim)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let key = if r.total { format!("b{}", r.bidegree.0) } else { format!("({},{})", r.bidegree.0, r.bidegree.1) };
            out.push_str(&format!("C={} t={} {:<10} {:<6} {:>2}  {}\n", r.c, r.t, r.theory.name(), key, r.dim, r.generators.join(", ")));
        }
        out
    }
}

/// Report rows (dimensions and generators) of one (C, t) for the given theories.
pub fn report_rows(nc: &NakamuraComplexes, theories: &[Theory]) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    let (c, t) = (nc.params.c.clone(), nc.params.t.clone());
    for &th in theories {
        let table = nc.cohomology(th);
        for e in &table.dims {
            let (bidegree, total, generators) = match (e.p, e.q, e.k) {
                (Some(p), Some(q), _) => ((p, q), false, nc.complex_for(th).labels(p, q).to_vec()),
                (_, _, Some(k)) => ((k, 0), true, vec![]),
                _ => continue,
            };
            rows.push(ReportRow { c: c.clone(), t: t.clone(), theory: th, bidegree, total, dim: e.dim, generators });
        }
    }
    rows
}

/// Dolbeault tables and Betti numbers for each C at t = 0, then de Rham,
/// Dolbeault and Bott-Chern numbers of J_{ck,t} for each t.
pub fn nakamura_tables(cs: &[G], ck: &G, ts: &[G]) -> Result<NakamuraReport> {
    let mut rows = Vec::new();
    for c in cs {
        let nc = build_complexes(&NakamuraParams::new(c.clone(), G::zero())?)?;
        rows.extend(report_rows(&nc, &[Theory::Dolbeault, Theory::DeRham]));
    }
    for t in ts {
        let nc = build_complexes(&NakamuraParams::new(ck.clone(), t.clone())?)?;
        rows.extend(report_rows(&nc, &[Theory::DeRham, Theory::Dolbeault, Theory::BottChern]));
    }
    Ok(NakamuraReport { rows })
}

/// Harmonic representatives of the X_k family, per theory, t = 0 or t ≠ 0
/// and bidegree. Entries are token lists separated by commas; `const` is 1.
const HARMONIC: &[(Theory, bool, usize, usize, &str)] = &[
    (Theory::Dolbeault, false, 0, 0, "const"),
    (Theory::Dolbeault, false, 1, 0, "1, 2, 3"),
    (Theory::Dolbeault, false, 0, 1, "t1, t2, b3"),
    (Theory::Dolbeault, false, 2, 0, "1 2, 1 3, 2 3"),
    (Theory::Dolbeault, false, 1, 1, "1 t1, 1 t2, 1 b3, 2 t1, 2 t2, 2 b3, 3 t1, 3 t2, 3 b3"),
    (Theory::Dolbeault, false, 0, 2, "t1 t2, t1 b3, t2 b3"),
    (Theory::Dolbeault, false, 3, 0, "1 2 3"),
    (Theory::Dolbeault, false, 2, 1, "1 2 t1, 1 2 t2, 1 2 b3, 1 3 t1, 1 3 t2, 1 3 b3, 2 3 t1, 2 3 t2, 2 3 b3"),
    (Theory::Dolbeault, false, 1, 2, "1 t1 t2, 1 t1 b3, 1 t2 b3, 2 t1 t2, 2 t1 b3, 2 t2 b3, 3 t1 t2, 3 t1 b3, 3 t2 b3"),
    (Theory::Dolbeault, false, 0, 3, "t1 t2 b3"),
    (Theory::Dolbeault, false, 3, 1, "1 2 3 t1, 1 2 3 t2, 1 2 3 b3"),
    (Theory::Dolbeault, false, 2, 2, "1 2 t1 t2, 1 2 t1 b3, 1 2 t2 b3, 1 3 t1 t2, 1 3 t1 b3, 1 3 t2 b3, 2 3 t1 t2, 2 3 t1 b3, 2 3 t2 b3"),
    (Theory::Dolbeault, false, 1, 3, "1 t1 t2 b3, 2 t1 t2 b3, 3 t1 t2 b3"),
    (Theory::Dolbeault, false, 3, 2, "1 2 3 t1 t2, 1 2 3 t1 b3, 1 2 3 t2 b3"),
    (Theory::Dolbeault, false, 2, 3, "1 2 t1 t2 b3, 1 3 t1 t2 b3, 2 3 t1 t2 b3"),
    (Theory::Dolbeault, false, 3, 3, "1 2 3 t1 t2 b3"),
    (Theory::Dolbeault, true, 0, 0, "const"),
    (Theory::Dolbeault, true, 1, 0, "3"),
    (Theory::Dolbeault, true, 0, 1, "b3"),
    (Theory::Dolbeault, true, 2, 0, "1 2"),
    (Theory::Dolbeault, true, 1, 1, "1 t2, 2 t1, 3 b3"),
    (Theory::Dolbeault, true, 0, 2, "t1 t2"),
    (Theory::Dolbeault, true, 3, 0, "1 2 3"),
    (Theory::Dolbeault, true, 2, 1, "1 2 b3, 1 3 t2, 2 3 t1"),
    (Theory::Dolbeault, true, 1, 2, "1 t2 b3, 2 t1 b3, 3 t1 t2"),
    (Theory::Dolbeault, true, 0, 3, "t1 t2 b3"),
    (Theory::Dolbeault, true, 3, 1, "1 2 3 b3"),
    (Theory::Dolbeault, true, 2, 2, "1 2 t1 t2, 1 3 t2 b3, 2 3 t1 b3"),
    (Theory::Dolbeault, true, 1, 3, "3 t1 t2 b3"),
    (Theory::Dolbeault, true, 3, 2, "1 2 3 t1 t2"),
    (Theory::Dolbeault, true, 2, 3, "1 2 t1 t2 b3"),
    (Theory::Dolbeault, true, 3, 3, "1 2 3 t1 t2 b3"),
    (Theory::BottChern, false, 0, 0, "const"),
    (Theory::BottChern, false, 1, 0, "3"),
    (Theory::BottChern, false, 0, 1, "b3"),
    (Theory::BottChern, false, 2, 0, "1 2, 1 3, 2 3"),
    (Theory::BottChern, false, 1, 1, "1 t2, 2 t1, 3 t1, 3 t2, 3 b3, bt1 b3, bt2 b3"),
    (Theory::BottChern, false, 0, 2, "t1 t2, b1 b3, b2 b3"),
    (Theory::BottChern, false, 3, 0, "1 2 3"),
    (Theory::BottChern, false, 2, 1, "1 2 b3, 1 3 t1, 1 3 t2, 1 3 b3, 2 3 t1, 2 3 t2, 2 3 b3, bt1 3 b3, bt2 3 b3"),
    (Theory::BottChern, false, 1, 2, "1 t2 b3, 2 t1 b3, 3 t1 t2, 3 t1 b3, 3 t2 b3, bt1 b1 b3, 3 b1 b3, bt2 b2 b3, 3 b2 b3"),
    (Theory::BottChern, false, 0, 3, "t1 t2 b3"),
    (Theory::BottChern, false, 3, 1, "1 2 3 t1, 1 2 3 t2, 1 2 3 b3"),
    (
        Theory::BottChern,
        false,
        2,
        2,
        "1 2 t1 t2, 1 3 t1 t2, 1 3 t1 b3, 1 3 t2 b3, 2 3 t1 t2, 2 3 t1 b3, 2 3 t2 b3, bt1 bt2 b1 b3, bt1 bt2 b2 b3, bt1 3 b1 b3, bt2 3 b2 b3",
    ),
    (Theory::BottChern, false, 1, 3, "3 t1 t2 b3, bt1 b1 b2 b3, bt2 b1 b2 b3"),
    (Theory::BottChern, false, 3, 2, "1 2 3 t1 t2, 1 2 3 t1 b3, 1 2 3 t2 b3, bt1 bt2 3 b1 b3, bt1 bt2 3 b2 b3"),
    (Theory::BottChern, false, 2, 3, "1 2 t1 t2 b3, 1 3 t1 t2 b3, 2 3 t1 t2 b3, bt1 3 b1 b2 b3, bt2 3 b1 b2 b3"),
    (Theory::BottChern, false, 3, 3, "1 2 3 t1 t2 b3"),
    (Theory::BottChern, true, 0, 0, "const"),
    (Theory::BottChern, true, 1, 0, "3"),
    (Theory::BottChern, true, 0, 1, "b3"),
    (Theory::BottChern, true, 2, 0, "1 2"),
    (Theory::BottChern, true, 1, 1, "1 t2, 2 t1, 3 b3"),
    (Theory::BottChern, true, 0, 2, "t1 t2"),
    (Theory::BottChern, true, 3, 0, "1 2 3"),
    (Theory::BottChern, true, 2, 1, "1 2 b3, 1 3 t2, 2 3 t1"),
    (Theory::BottChern, true, 1, 2, "1 t2 b3, 2 t1 b3, 3 t1 t2"),
    (Theory::BottChern, true, 0, 3, "t1 t2 b3"),
    (Theory::BottChern, true, 3, 1, "1 2 3 b3"),
    (Theory::BottChern, true, 2, 2, "1 2 t1 t2, 1 3 t2 b3, 2 3 t1 b3"),
    (Theory::BottChern, true, 1, 3, "3 t1 t2 b3"),
    (Theory::BottChern, true, 3, 2, "1 2 3 t1 t2"),
    (Theory::BottChern, true, 2, 3, "1 2 t1 t2 b3"),
    (Theory::BottChern, true, 3, 3, "1 2 3 t1 t2 b3"),
];

/// Rows of the printed table that are not cocycles or not in the complex as
/// printed, with the entry used instead.
pub const HARMONIC_CORRECTIONS: &[(Theory, bool, usize, usize, &str, &str)] = &[
    (Theory::BottChern, false, 1, 3, "1 t1 t2 b3, 2 t1 t2 b3, 3 t1 t2 b3", "3 t1 t2 b3, bt1 b1 b2 b3, bt2 b1 b2 b3"),
    (
        Theory::BottChern,
        false,
        3,
        2,
        "1 2 3 t1 t2, 1 2 3 t1 b3, 1 2 3 t2 b3, bt1 2 3 b1 b3, bt1 2 3 b2 b3",
        "1 2 3 t1 t2, 1 2 3 t1 b3, 1 2 3 t2 b3, bt1 bt2 3 b1 b3, bt1 bt2 3 b2 b3",
    ),
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepresentativeRow {
    pub theory: Theory,
    pub deformed: bool,
    pub p: usize,
    pub q: usize,
    pub labels: Vec<String>,
}

/// The harmonic-representative table of the X_k family.
pub fn harmonic_table() -> Vec<RepresentativeRow> {
    HARMONIC
        .iter()
        .map(|(theory, deformed, p, q, list)| RepresentativeRow {
            theory: *theory,
            deformed: *deformed,
            p: *p,
            q: *q,
            labels: list
                .split(',')
                .map(|w| match w.trim() {
                    "const" => "1".to_string(),
                    w => format!("phi^{{{w}}}"),
                })
                .collect(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepresentativeCheck {
    #[serde(rename = "C")]
    pub c: G,
    pub t: G,
    pub row: RepresentativeRow,
    pub verified: bool,
}

/// Checks every row of the table for C = ck, using `t` for the deformed rows.
pub fn verify_harmonic_table(ck: &G, t: &G) -> Result<Vec<RepresentativeCheck>> {
    if gz(t) {
        return Err(Error::OutOfRange("pass a nonzero t for the deformed rows".into()));
    }
    let at0 = build_complexes(&NakamuraParams::new(ck.clone(), G::zero())?)?;
    let att = build_complexes(&NakamuraParams::new(ck.clone(), t.clone())?)?;
    let mut out = Vec::new();
    for row in harmonic_table() {
        let nc = if row.deformed { &att } else { &at0 };
        let labels: Vec<&str> = row.labels.iter().map(String::as_str).collect();
        let verified = nc.verify_representatives(row.theory, row.p, row.q, &labels)?;
        out.push(RepresentativeCheck { c: ck.clone(), t: if row.deformed { t.clone() } else { G::zero() }, row, verified });
    }
    Ok(out)
}

/// Whether classify() sends J_C to s12.
pub fn jc_is_s12(c: &G) -> Result<bool> {
    let (params, mu) = jc_splitting(c)?;
    let scaled = jc_coframe(c)?.change(&M::diag(vec![G::one(), G::one(), mu]))?;
    if scaled != crate::coframe::splitting_coframe(&params) {
        return Err(Error::Internal(format!("J_C for C = {c} does not match its splitting parameters")));
    }
    Ok(classify(&params)?.label == CatalogLabel::S12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cq;

    fn c(s: &str) -> G {
        G::parse(s).unwrap()
    }

    #[test]
    fn character_examples() {
        for s in ["i", "i/2", "1+i", "2+3i", "2i/3", "-1/2-i/3"] {
            let ch = characters(&c(s)).unwrap();
            assert!(ch.beta1.is_unitary() && ch.gamma1.is_unitary());
            assert!(gz(&ch.alpha1.mul(&ch.beta1.inv()).b), "α₁β₁⁻¹ holomorphic");
            assert!(gz(&ch.alpha2.mul(&ch.beta2.inv()).b));
            assert!(gz(&ch.alpha1.conj().mul(&ch.gamma1.inv()).b));
        }
        let ch = characters(&c("i")).unwrap();
        assert_eq!(ch.beta1, Character::new(c("-2i"), c("-2i")));
        assert!(characters(&c("2")).is_err());
    }

    #[test]
    fn restriction_cases() {
        let cases = ["i", "i/2", "i/3", "-i/4", "1+i", "2+3i", "2i/3", "1/2+i/5"];
        for s in cases {
            let x = c(s);
            let ch = characters(&x).unwrap();
            let triv = |h: &Character| char_restriction_trivial(h, &x).unwrap();
            assert!(triv(&ch.beta1.mul(&ch.gamma1.inv())), "{s}");
            assert_eq!(triv(&ch.beta1.mul(&ch.gamma1)), is_i_over_k(&x), "{s}");
            assert_eq!(triv(&ch.beta1), is_i_over_odd(&x), "{s}");
            assert_eq!(triv(&ch.gamma1), is_i_over_odd(&x), "{s}");
        }
        assert!(char_restriction_trivial(&characters(&c("i/3")).unwrap().beta1, &c("i/3")).unwrap());
    }

    #[test]
    fn phi_equations() {
        for s in ["i", "1+i", "i/2"] {
            let x = c(s);
            let nc = build_complexes(&NakamuraParams::new(x.clone(), G::zero()).unwrap()).unwrap();
            let forms = token_forms(&nc.params).unwrap();
            let f = |t: Token| forms.iter().find(|(x, _)| *x == t).unwrap().1.clone();
            let lam = x.clone() + x.conj() - G::i() - G::i();
            let d = |t: Token| nc.frame().d(&f(t));
            assert_eq!(d(Token::P(1)), f(Token::P(1)).wedge(&f(Token::P(3))).scale(&-lam.clone()));
            assert_eq!(d(Token::P(2)), f(Token::P(2)).wedge(&f(Token::P(3))).scale(&lam));
            assert_eq!(d(Token::T(1)), f(Token::P(3)).wedge(&f(Token::T(1))).scale(&lam));
            assert!(d(Token::P(3)).is_zero() && d(Token::B(3)).is_zero());
            // φ̃¹∧φ̃² = φ̄¹∧φ̄²
            assert_eq!(f(Token::T(1)).wedge(&f(Token::T(2))), f(Token::B(1)).wedge(&f(Token::B(2))));
            assert_eq!(f(Token::P(2)).wedge(&f(Token::T(1))), f(Token::B(1)).wedge(&f(Token::Bt(2))).scale(&-G::one()));
            assert_eq!(f(Token::P(1)).wedge(&f(Token::T(2))), f(Token::B(2)).wedge(&f(Token::Bt(1))).scale(&-G::one()));
        }
    }

    #[test]
    fn complex_examples() {
        let nc = build_complexes(&NakamuraParams::new(c("i/3"), G::zero()).unwrap()).unwrap();
        assert_eq!(nc.b.labels(1, 0), ["phi^{1}", "phi^{2}", "phi^{3}"]);
        let nc = build_complexes(&NakamuraParams::new(c("1+i"), G::zero()).unwrap()).unwrap();
        assert_eq!(nc.b.labels(1, 1), ["phi^{1 t2}", "phi^{2 t1}", "phi^{3 b3}"]);
        assert!(nc.b.lemma_b_sufficient());
        assert!(nc.c.ddbar_lemma());
        let nc = build_complexes(&NakamuraParams::new(c("i"), cq(1, 0, 2)).unwrap()).unwrap();
        assert_eq!(nc.c.dim(1, 0), 5);
        let nc = build_complexes(&NakamuraParams::new(c("i"), G::zero()).unwrap()).unwrap();
        assert!(!nc.b.lemma_b_sufficient());
        let h = nc.cohomology(Theory::Dolbeault);
        assert_eq!((h.get(1, 0), h.get(1, 1)), (3, 9));
        assert!(NakamuraParams::new(c("1+i"), cq(1, 0, 2)).is_err());
        assert!(NakamuraParams::new(c("i"), G::one()).is_err());
    }

    #[test]
    fn deformed_equations() {
        for (s, t) in [("i", cq(1, 0, 2)), ("1+i", cq(1, 1, 4)), ("-i/3", cq(0, 1, 3))] {
            let x = c(s);
            let cf = deformed_jc_coframe(&x, &t).unwrap();
            assert!(cf.integrable());
            let (a, b) = deformed_jc_coefficients(&x, &t);
            assert_eq!(cf.dw[0], omega(3, &[1, 3], &[], a.clone()).add(&omega(3, &[1], &[3], b.clone())));
            assert_eq!(cf.dw[1], omega(3, &[2, 3], &[], -a).add(&omega(3, &[2], &[3], -b)));
        }
    }

    #[test]
    fn moduli_and_equivalence() {
        assert_eq!(moduli_invariant(NakamuraFamily::I, &G::zero()).unwrap(), 1);
        assert_eq!(moduli_invariant(NakamuraFamily::II, &G::zero()).unwrap(), 1);
        assert_eq!(moduli_invariant(NakamuraFamily::III, &G::zero()).unwrap(), 0);
        assert!(moduli_invariant(NakamuraFamily::III, &G::one()).is_err());
        assert!(equivalence_witness_jb(&cq(1, 0, 2)).is_ok());
        assert!(equivalence_witness_jb(&cq(-1, 0, 3)).is_ok());
        assert!(equivalence_witness_jb(&cq(1, 2, 3)).is_ok());
        assert!(equivalence_witness_jb(&G::zero()).is_err());
    }

    #[test]
    fn defnak() {
        let r = defnak_family(&G::zero()).unwrap();
        assert!(r.canonical_trivial && r.matches_display);
        let t = cq(1, 0, 4);
        let r = defnak_family(&t).unwrap();
        assert!(r.integrable && r.matches_display);
        assert!(!r.canonical_trivial);
        assert_eq!(r.top_coefficient, -t);
        assert_eq!(r.closed_10_forms, 0);
    }

    #[test]
    fn harmonic_examples() {
        let nc = build_complexes(&NakamuraParams::new(c("i"), cq(1, 0, 2)).unwrap()).unwrap();
        assert!(nc.verify_representatives(Theory::BottChern, 1, 1, &["phi^{1 t2}", "phi^{2 t1}", "phi^{3 b3}"]).unwrap());
        assert!(!nc.verify_representatives(Theory::BottChern, 1, 1, &["phi^{1 t2}", "phi^{1 t2}", "phi^{3 b3}"]).unwrap());
        assert!(nc.verify_representatives(Theory::BottChern, 1, 1, &["phi^{1 2}"]).is_err());
        let nc = build_complexes(&NakamuraParams::new(c("i"), G::zero()).unwrap()).unwrap();
        assert!(nc.verify_representatives(Theory::Dolbeault, 1, 0, &["phi^{1}", "phi^{2}", "phi^{3}"]).unwrap());
        // the printed Bott-Chern (1,3) row is not ∂-closed
        assert!(!nc.verify_representatives(Theory::BottChern, 1, 3, &["phi^{1 t1 t2 b3}"]).unwrap());
        assert!(nc.verify_representatives(Theory::BottChern, 3, 2, &["phi^{bt1 2 3 b1 b3}"]).is_err());
    }

    #[test]
    fn jc_lands_in_s12() {
        for s in ["i", "-i", "1+i", "i/2", "2i/3"] {
            assert!(jc_is_s12(&c(s)).unwrap(), "{s}");
        }
    }
}
