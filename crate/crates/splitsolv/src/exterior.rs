//! Sparse exterior algebra on a finite set of generators, and differentials
//! determined by their values on generators.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::matrix::ExactMatrix;
use crate::scalar::Field;

/// A monomial e^{i1}∧…∧e^{ik} with i1 < … < ik, stored as a bitmask.
pub type Mask = u32;

pub fn degree(m: Mask) -> usize {
    m.count_ones() as usize
}

pub fn indices(m: Mask) -> Vec<usize> {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

pub fn mask_of(ix: &[usize]) -> Mask {
    ix.iter().fold(0, |m, &i| m | 1 << i)
}

/// Sign of e^a ∧ e^b relative to e^{a|b}; `None` when they overlap.
pub fn wedge_sign(a: Mask, b: Mask) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    // count pairs (x in a, y in b) with x > y
    let mut inv = 0;
    for y in indices(b) {
        inv += (a >> (y + 1)).count_ones();
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

/// Sign and sorted mask of e^{σ(i1)}∧…∧e^{σ(ik)}; `None` if σ collapses
/// two indices.
pub fn relabel(m: Mask, sigma: &[usize]) -> Option<(i32, Mask)> {
    let img: Vec<usize> = indices(m).into_iter().map(|i| sigma[i]).collect();
    let mut sign = 1;
    for i in 0..img.len() {
        for j in i + 1..img.len() {
            if img[i] == img[j] {
                return None;
            }
            if img[i] > img[j] {
                sign = -sign;
            }
        }
    }
    Some((sign, mask_of(&img)))
}

/// All masks of the given degree on `n` generators, in increasing order.
pub fn masks_of_degree(n: usize, k: usize) -> Vec<Mask> {
    (0..1u32 << n).filter(|m| degree(*m) == k).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Form<F> {
    pub terms: BTreeMap<Mask, F>,
}

impl<F: Field> Default for Form<F> {
    fn default() -> Self {
        Form { terms: BTreeMap::new() }
    }
}

impl<F: Field> Form<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn mono(m: Mask, c: F) -> Self {
        let mut f = Self::zero();
        f.add_term(m, c);
        f
    }

    pub fn generator(i: usize) -> Self {
        Self::mono(1 << i, F::one())
    }

    /// Monomial from an unsorted index list, sign included.
    pub fn from_indices(ix: &[usize], c: F) -> Self {
        let mut f = Self::mono(0, c);
        for &i in ix {
            f = f.wedge(&Self::generator(i));
        }
        f
    }

    pub fn constant(c: F) -> Self {
        Self::mono(0, c)
    }

    pub fn add_term(&mut self, m: Mask, c: F) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn coeff(&self, m: Mask) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, c.clone() * s.clone());
        }
        r
    }

    pub fn wedge(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if let Some(s) = wedge_sign(*a, *b) {
                    let c = x.clone() * y.clone();
                    r.add_term(a | b, if s > 0 { c } else { -c });
                }
            }
        }
        r
    }

    pub fn filter(&self, keep: impl Fn(Mask) -> bool) -> Self {
        Form { terms: self.terms.iter().filter(|(m, _)| keep(**m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Form<G> {
        let mut r = Form::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, f(c));
        }
        r
    }

    /// Apply a permutation of generators.
    pub fn relabel(&self, sigma: &[usize]) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            if let Some((s, m2)) = relabel(*m, sigma) {
                r.add_term(m2, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
        r
    }

    /// Substitute each generator e^b by the 1-form `images[b]`.
    pub fn substitute(&self, images: &[Form<F>]) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for i in indices(*m) {
                t = t.wedge(&images[i]);
            }
            r = r.add(&t);
        }
        r
    }

    /// Coordinates with respect to a list of monomials.
    pub fn coords(&self, basis: &[Mask]) -> Vec<F> {
        basis.iter().map(|m| self.coeff(*m)).collect()
    }

    pub fn from_coords(basis: &[Mask], v: &[F]) -> Self {
        let mut f = Self::zero();
        for (m, c) in basis.iter().zip(v) {
            f.add_term(*m, c.clone());
        }
        f
    }
}

/// A graded-commutative algebra freely generated in degree one, with a
/// derivation fixed by its values on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Dga<F> {
    pub dgen: Vec<Form<F>>,
}

impl<F: Field> Dga<F> {
    pub fn new(dgen: Vec<Form<F>>) -> Self {
        Dga { dgen }
    }

    pub fn ngen(&self) -> usize {
        self.dgen.len()
    }

    pub fn d_mono(&self, m: Mask) -> Form<F> {
        let ix = indices(m);
        let mut out = Form::zero();
        for (j, &i) in ix.iter().enumerate() {
            let before = mask_of(&ix[..j]);
            let after = mask_of(&ix[j + 1..]);
            let t = Form::mono(before, F::one()).wedge(&self.dgen[i]).wedge(&Form::mono(after, F::one()));
            out = if j % 2 == 0 { out.add(&t) } else { out.sub(&t) };
        }
        out
    }

    pub fn d(&self, f: &Form<F>) -> Form<F> {
        let mut out = Form::zero();
        for (m, c) in &f.terms {
            out = out.add(&self.d_mono(*m).scale(c));
        }
        out
    }

    /// Matrix of d from span(src) to span(dst), columns indexed by src.
    pub fn matrix(&self, src: &[Mask], dst: &[Mask]) -> ExactMatrix<F> {
        let cols: Vec<Vec<F>> = src.iter().map(|m| self.d_mono(*m).coords(dst)).collect();
        ExactMatrix::from_columns(dst.len(), &cols)
    }

    pub fn d_squared_vanishes(&self) -> bool {
        (0..self.ngen()).all(|k| self.d(&self.dgen[k]).is_zero())
    }

    /// Structure equations in a new basis f^a = Σ_b p[a][b] e^b.
    pub fn change_basis(&self, p: &ExactMatrix<F>) -> Result<Self> {
        let n = self.ngen();
        let pinv = p.inverse()?;
        let images: Vec<Form<F>> = (0..n)
            .map(|b| {
                let mut f = Form::zero();
                for x in 0..n {
                    f.add_term(1 << x, pinv[(b, x)].clone());
                }
                f
            })
            .collect();
        let dgen = (0..n)
            .map(|a| {
                let mut acc = Form::zero();
                for b in 0..n {
                    if !p[(a, b)].is_zero() {
                        acc = acc.add(&self.dgen[b].scale(&p[(a, b)]));
                    }
                }
                acc.substitute(&images)
            })
            .collect();
        Ok(Dga { dgen })
    }

    /// Betti numbers of the complex (Λ•, d).
    pub fn betti(&self) -> Vec<usize> {
        let n = self.ngen();
        let bases: Vec<Vec<Mask>> = (0..=n).map(|k| masks_of_degree(n, k)).collect();
        let ranks: Vec<usize> = (0..n).map(|k| self.matrix(&bases[k], &bases[k + 1]).rank()).collect();
        (0..=n)
            .map(|k| {
                let r_out = if k < n { ranks[k] } else { 0 };
                let r_in = if k > 0 { ranks[k - 1] } else { 0 };
                bases[k].len() - r_out - r_in
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qi, Rational};

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_sign(0b10, 0b01), Some(-1));
        assert_eq!(wedge_sign(0b01, 0b10), Some(1));
        assert_eq!(wedge_sign(0b011, 0b100), Some(1));
        assert_eq!(wedge_sign(0b110, 0b001), Some(1));
        assert_eq!(wedge_sign(0b101, 0b010), Some(-1));
        assert_eq!(wedge_sign(0b1, 0b1), None);
        let f = Form::<Rational>::from_indices(&[2, 0, 1], qi(1));
        assert_eq!(f.coeff(0b111), qi(1));
    }

    #[test]
    fn heisenberg_betti() {
        // de³ = e¹²
        let dgen = vec![Form::zero(), Form::zero(), Form::mono(0b011, qi(1))];
        let g = Dga::<Rational>::new(dgen);
        assert!(g.d_squared_vanishes());
        assert_eq!(g.betti(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn change_basis_round_trip() {
        let dgen = vec![Form::zero(), Form::zero(), Form::mono(0b011, qi(1))];
        let g = Dga::<Rational>::new(dgen);
        let p = ExactMatrix::from_rows(vec![vec![qi(1), qi(2), qi(0)], vec![qi(0), qi(1), qi(0)], vec![qi(1), qi(0), qi(3)]]);
        let h = g.change_basis(&p).unwrap();
        let back = h.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, g);
    }
}
