//! Invariant (1,0)-coframes and the complexified exterior calculus on
//! Λ^{p,q}. Generator `i < n` is ω^{i+1}, generator `n + i` is ω̄^{i+1}.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{degree, indices, masks_of_degree, Dga, Form, Mask};
use crate::lie::RealLieAlgebra;
use crate::matrix::ExactMatrix;
use crate::scalar::{cq, Field, GaussianRational, Rational};

pub type CForm = Form<GaussianRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    C2,
    KT,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplittingParams {
    pub family: Family,
    pub a: GaussianRational,
    pub b: GaussianRational,
    pub eps: u8,
}

impl SplittingParams {
    pub fn c2(a: GaussianRational, b: GaussianRational, eps: u8) -> Self {
        assert!(eps <= 1, "ε must be 0 or 1");
        SplittingParams { family: Family::C2, a, b, eps }
    }
    pub fn kt(eps: u8) -> Self {
        assert!(eps <= 1, "ε must be 0 or 1");
        SplittingParams { family: Family::KT, a: GaussianRational::zero(), b: GaussianRational::zero(), eps }
    }
    pub fn eps_scalar(&self) -> GaussianRational {
        GaussianRational::from_i64(self.eps as i64)
    }
}

impl fmt::Display for SplittingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::C2 => write!(f, "C2(A={}, B={}, eps={})", self.a, self.b, self.eps),
            Family::KT => write!(f, "KT(eps={})", self.eps),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Coframe {
    pub n: usize,
    /// dω^i as a 2-form on the 2n generators.
    pub dw: Vec<CForm>,
}

/// (p, q) type of a monomial on n holomorphic and n antiholomorphic generators.
pub fn bidegree(n: usize, m: Mask) -> (usize, usize) {
    let low = (1u32 << n) - 1;
    (degree(m & low), degree(m >> n))
}

/// Monomials of type (p,q) in canonical ω^I∧ω̄^J order.
pub fn masks_of_bidegree(n: usize, p: usize, q: usize) -> Vec<Mask> {
    let mut out: Vec<Mask> = masks_of_degree(2 * n, p + q).into_iter().filter(|m| bidegree(n, *m) == (p, q)).collect();
    let low = (1u32 << n) - 1;
    out.sort_by_key(|m| (m & low, m >> n));
    out
}

pub fn conj_sigma(n: usize) -> Vec<usize> {
    (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect()
}

/// Complex conjugate of a form: ω ↔ ω̄ with conjugated coefficients.
pub fn conj_form(n: usize, f: &CForm) -> CForm {
    f.map_coeffs(|c| c.conj()).relabel(&conj_sigma(n))
}

/// ω^{I}∧ω̄^{J} from 1-based index lists.
pub fn omega(n: usize, hol: &[usize], anti: &[usize], c: GaussianRational) -> CForm {
    let ix: Vec<usize> = hol.iter().map(|i| i - 1).chain(anti.iter().map(|j| n + j - 1)).collect();
    Form::from_indices(&ix, c)
}

pub fn render_mask(n: usize, m: Mask) -> String {
    let mut s = String::from("w");
    for i in indices(m) {
        if i < n {
            s.push_str(&(i + 1).to_string());
        } else {
            s.push('~');
            s.push_str(&(i - n + 1).to_string());
        }
    }
    s
}

fn render_coeff(c: &GaussianRational, first: bool) -> String {
    let one = GaussianRational::one();
    let (plus, minus) = if first { ("", "-") } else { (" + ", " - ") };
    let (sign, a) = if c.re.is_negative() || (Zero::is_zero(&c.re) && c.im.is_negative()) { (minus, -c.clone()) } else { (plus, c.clone()) };
    if a == one {
        return sign.into();
    }
    if a == GaussianRational::i() {
        return format!("{}i*", sign);
    }
    if a.is_real() || Zero::is_zero(&a.re) {
        return format!("{}{}*", sign, a);
    }
    format!("{}({})*", plus, c)
}

/// Text rendering in the style `A*w13 + B*w1~3`.
pub fn render_form(n: usize, f: &CForm) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let low = (1u32 << n) - 1;
    let mut ts: Vec<(&Mask, &GaussianRational)> = f.terms.iter().collect();
    ts.sort_by_key(|(m, _)| (degree(**m), std::cmp::Reverse(degree(**m & low)), **m & low, **m >> n));
    let mut out = String::new();
    for (k, (m, c)) in ts.iter().enumerate() {
        out.push_str(&render_coeff(c, k == 0));
        out.push_str(&render_mask(n, **m));
    }
    out
}

impl Coframe {
    pub fn new(n: usize, dw: Vec<CForm>) -> Result<Self> {
        if dw.len() != n {
            return Err(Error::Dimension(format!("expected {} differentials, got {}", n, dw.len())));
        }
        for f in &dw {
            if f.terms.keys().any(|m| degree(*m) != 2 || m >> (2 * n) != 0) {
                return Err(Error::Dimension("each dω must be a 2-form on the coframe".into()));
            }
        }
        Ok(Coframe { n, dw })
    }

    pub fn abelian(n: usize) -> Self {
        Coframe { n, dw: vec![Form::zero(); n] }
    }

    pub fn dga(&self) -> Dga<GaussianRational> {
        let mut dgen = self.dw.clone();
        dgen.extend(self.dw.iter().map(|f| conj_form(self.n, f)));
        Dga::new(dgen)
    }

    /// Component of dω^i of type (p,q), p+q = 2.
    pub fn part(&self, i: usize, p: usize, q: usize) -> CForm {
        let n = self.n;
        self.dw[i].filter(|m| bidegree(n, m) == (p, q))
    }

    pub fn integrable(&self) -> bool {
        (0..self.n).all(|i| self.part(i, 0, 2).is_zero())
    }

    /// The (0,2) parts of the structure equations.
    pub fn defect(&self) -> Vec<CForm> {
        (0..self.n).map(|i| self.part(i, 0, 2)).collect()
    }

    pub fn conj(&self, f: &CForm) -> CForm {
        conj_form(self.n, f)
    }

    pub fn d(&self, f: &CForm) -> CForm {
        self.dga().d(f)
    }

    fn typed_part(&self, f: &CForm, dp: usize, dq: usize) -> Result<CForm> {
        if !self.integrable() {
            return Err(Error::NonIntegrable);
        }
        let n = self.n;
        let dga = self.dga();
        let mut out = Form::zero();
        for (m, c) in &f.terms {
            let (p, q) = bidegree(n, *m);
            let t = dga.d_mono(*m).filter(|x| bidegree(n, x) == (p + dp, q + dq));
            out = out.add(&t.scale(c));
        }
        Ok(out)
    }

    /// ∂f, the (p+1,q) part of df.
    pub fn del(&self, f: &CForm) -> Result<CForm> {
        self.typed_part(f, 1, 0)
    }

    /// ∂̄f, the (p,q+1) part of df.
    pub fn delbar(&self, f: &CForm) -> Result<CForm> {
        self.typed_part(f, 0, 1)
    }

    pub fn d_squared_vanishes(&self) -> bool {
        self.dga().d_squared_vanishes()
    }

    /// d(ω^{1…n}) = 0.
    pub fn canonical_trivial(&self) -> bool {
        let top = Form::mono((1 << self.n) - 1, GaussianRational::one());
        self.d(&top).is_zero()
    }

    /// Matrix of the change from (ω, ω̄) to the real basis with
    /// ω^j = α^{2j−1} + iα^{2j}; row a gives α^{a+1} in terms of (ω, ω̄).
    pub fn alpha_matrix(n: usize) -> ExactMatrix<GaussianRational> {
        let mut p = ExactMatrix::zeros(2 * n, 2 * n);
        for j in 0..n {
            p[(2 * j, j)] = cq(1, 0, 2);
            p[(2 * j, n + j)] = cq(1, 0, 2);
            p[(2 * j + 1, j)] = cq(0, -1, 2);
            p[(2 * j + 1, n + j)] = cq(0, 1, 2);
        }
        p
    }

    /// Real structure equations in the basis α with ω^j = α^{2j−1} + iα^{2j}.
    pub fn realify(&self) -> Result<RealLieAlgebra> {
        let h = self.dga().change_basis(&Self::alpha_matrix(self.n))?;
        let mut diff = Vec::with_capacity(2 * self.n);
        for f in &h.dgen {
            let mut r = Form::zero();
            for (m, c) in &f.terms {
                if !c.is_real() {
                    return Err(Error::Internal("realification produced a non-real coefficient".into()));
                }
                r.add_term(*m, c.re.clone());
            }
            diff.push(r);
        }
        RealLieAlgebra::new(diff)
    }

    /// The endomorphism J of the real algebra in the α basis (J*ω = iω).
    pub fn real_j(&self) -> ExactMatrix<Rational> {
        let n = self.n;
        let mut j = ExactMatrix::zeros(2 * n, 2 * n);
        for k in 0..n {
            j[(2 * k, 2 * k + 1)] = Rational::from_i64(-1);
            j[(2 * k + 1, 2 * k)] = Rational::from_i64(1);
        }
        j
    }

    /// Structure equations of ω'^a = Σ p_ab ω^b + q_ab ω̄^b. The (0,2)
    /// parts are kept, so the result may be non-integrable.
    pub fn deform(&self, p: &ExactMatrix<GaussianRational>, q: &ExactMatrix<GaussianRational>) -> Result<Coframe> {
        let n = self.n;
        if p.rows() != n || p.cols() != n || q.rows() != n || q.cols() != n {
            return Err(Error::Dimension("p and q must be n×n".into()));
        }
        let t = ExactMatrix::from_fn(2 * n, 2 * n, |a, b| match (a < n, b < n) {
            (true, true) => p[(a, b)].clone(),
            (true, false) => q[(a, b - n)].clone(),
            (false, true) => q[(a - n, b)].conj(),
            (false, false) => p[(a - n, b - n)].conj(),
        });
        let h = self.dga().change_basis(&t)?;
        Ok(Coframe { n, dw: h.dgen[..n].to_vec() })
    }

    /// Linear change ω'^a = Σ p_ab ω^b.
    pub fn change(&self, p: &ExactMatrix<GaussianRational>) -> Result<Coframe> {
        self.deform(p, &ExactMatrix::zeros(self.n, self.n))
    }

    pub fn render(&self) -> String {
        (0..self.n).map(|i| format!("d w{} = {}", i + 1, render_form(self.n, &self.dw[i]))).collect::<Vec<_>>().join("\n")
    }

    /// Basis of all invariant forms of total degree k.
    pub fn basis_of_degree(&self, k: usize) -> Vec<Mask> {
        masks_of_degree(2 * self.n, k)
    }
}

impl fmt::Display for Coframe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The reduced structure equations of a splitting-type complex structure.
pub fn splitting_coframe(params: &SplittingParams) -> Coframe {
    let n = 3;
    let one = GaussianRational::one();
    let eps = params.eps_scalar();
    let dw = match params.family {
        Family::C2 => {
            let (a, b) = (params.a.clone(), params.b.clone());
            let c23 = -(a.clone() + b.conj() + eps.clone());
            vec![omega(n, &[1, 3], &[], a).add(&omega(n, &[1], &[3], b)), omega(n, &[2, 3], &[], c23).add(&omega(n, &[2], &[3], eps)), Form::zero()]
        }
        Family::KT => vec![omega(n, &[1, 3], &[], eps.clone()).add(&omega(n, &[1], &[3], -eps)), omega(n, &[1], &[1], one), Form::zero()],
    };
    Coframe { n, dw }
}
