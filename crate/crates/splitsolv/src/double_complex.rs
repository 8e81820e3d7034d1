//! Finite bigraded double complexes over ℚ(i) and their cohomologies.

use std::fmt;

use serde::Serialize;

use crate::coframe::{conj_form, masks_of_bidegree, render_mask, CForm, Coframe};
use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::matrix::{span_dim, ExactMatrix};
use crate::scalar::{Field, GaussianRational};

type G = GaussianRational;
type M = ExactMatrix<G>;

/// One bidegree: basis labels and the two differentials leaving it.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub labels: Vec<String>,
    /// (p,q) → (p+1,q)
    pub del: M,
    /// (p,q) → (p,q+1)
    pub delbar: M,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DoubleComplex {
    /// bidegrees run over 0..=n in each slot
    pub n: usize,
    cells: Vec<Cell>,
    /// conj(x) for x ∈ (p,q), in coordinates of (q,p): `M · x̄`. `None`
    /// entries mean the conjugate leaves the complex.
    conj: Option<Vec<Option<M>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theory {
    Dolbeault,
    BottChern,
    Aeppli,
    DeRham,
}

impl Theory {
    pub const ALL: [Theory; 4] = [Theory::Dolbeault, Theory::BottChern, Theory::Aeppli, Theory::DeRham];

    pub fn name(self) -> &'static str {
        match self {
            Theory::Dolbeault => "dolbeault",
            Theory::BottChern => "bott_chern",
            Theory::Aeppli => "aeppli",
            Theory::DeRham => "de_rham",
        }
    }

    pub fn parse(s: &str) -> Result<Theory> {
        let k = s.trim().to_ascii_lowercase().replace('-', "_");
        Ok(match k.as_str() {
            "dolbeault" | "dbar" => Theory::Dolbeault,
            "bott_chern" | "bc" => Theory::BottChern,
            "aeppli" | "a" => Theory::Aeppli,
            "de_rham" | "derham" | "dr" => Theory::DeRham,
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown cohomology theory '{s}'") }),
        })
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub theory: Theory,
    pub dims: Vec<DimEntry>,
}

impl CohomologyTable {
    /// Dimension at (p,q); for de Rham use `betti`.
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.dims.iter().find(|e| e.p == Some(p) && e.q == Some(q)).map_or(0, |e| e.dim)
    }

    pub fn betti(&self, k: usize) -> usize {
        self.dims.iter().find(|e| e.k == Some(k)).map_or(0, |e| e.dim)
    }

    /// Σ_{p+q=k} of a bigraded table, or b_k for de Rham.
    pub fn total(&self, k: usize) -> usize {
        if self.theory == Theory::DeRham {
            return self.betti(k);
        }
        self.dims.iter().filter(|e| e.p.zip(e.q).is_some_and(|(p, q)| p + q == k)).map(|e| e.dim).sum()
    }

    /// Stacked layout: one line per bidegree, grouped by total degree.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.theory);
        let mut last = None;
        for e in &self.dims {
            let key = match (e.p, e.q, e.k) {
                (Some(p), Some(q), _) => {
                    if last.is_some_and(|l| l != p + q) {
                        out.push_str("------\n");
                    }
                    last = Some(p + q);
                    format!("({p},{q})")
                }
                (_, _, Some(k)) => format!("b{k}"),
                _ => continue,
            };
            out.push_str(&format!("{key:<6} {}\n", e.dim));
        }
        out
    }
}

/// Which exactness notion produced a ∂∂̄-lemma counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    D,
    Del,
    Delbar,
}

/// A ∂- and ∂̄-closed pure-type form that is exact in the given sense but
/// not ∂∂̄-exact.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DdbarWitness {
    pub p: usize,
    pub q: usize,
    pub exactness: Exactness,
    pub coords: Vec<G>,
    pub form: String,
}

fn gz(x: &G) -> bool {
    Field::is_zero(x)
}

fn cols_of(m: &M) -> Vec<Vec<G>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

fn image(m: &M) -> Vec<Vec<G>> {
    independent(m.rows(), cols_of(m))
}

fn independent(n: usize, vs: Vec<Vec<G>>) -> Vec<Vec<G>> {
    let mut out: Vec<Vec<G>> = Vec::new();
    for v in vs {
        if v.iter().all(gz) {
            continue;
        }
        out.push(v);
        if span_dim(n, &out) < out.len() {
            out.pop();
        }
    }
    out
}

fn intersect(n: usize, a: &[Vec<G>], b: &[Vec<G>]) -> Vec<Vec<G>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut cols = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x.clone()).collect::<Vec<_>>()));
    let stacked = M::from_columns(n, &cols);
    let out = stacked
        .kernel_basis()
        .into_iter()
        .map(|k| {
            let mut v = vec![G::zero(); n];
            for (j, c) in k[..a.len()].iter().enumerate() {
                if gz(c) {
                    continue;
                }
                for i in 0..n {
                    v[i] = v[i].clone() + c.clone() * a[j][i].clone();
                }
            }
            v
        })
        .collect();
    independent(n, out)
}

fn in_span(n: usize, span: &[Vec<G>], v: &[G]) -> bool {
    let mut all = span.to_vec();
    all.push(v.to_vec());
    span_dim(n, &all) == span_dim(n, span)
}

impl DoubleComplex {
    /// Checks shapes and ∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0.
    pub fn new(n: usize, cells: Vec<Cell>, conj: Option<Vec<Option<M>>>) -> Result<Self> {
        if cells.len() != (n + 1) * (n + 1) {
            return Err(Error::Dimension(format!("expected {} cells", (n + 1) * (n + 1))));
        }
        let dc = DoubleComplex { n, cells, conj };
        for p in 0..=n {
            for q in 0..=n {
                let d = dc.dim(p, q);
                let c = dc.cell(p, q);
                if c.del.cols() != d || c.del.rows() != dc.dim(p + 1, q) {
                    return Err(Error::Dimension(format!("∂ at ({p},{q}) has the wrong shape")));
                }
                if c.delbar.cols() != d || c.delbar.rows() != dc.dim(p, q + 1) {
                    return Err(Error::Dimension(format!("∂̄ at ({p},{q}) has the wrong shape")));
                }
                if let Some(cm) = dc.conj.as_ref().and_then(|v| v[p * (n + 1) + q].as_ref()) {
                    if cm.cols() != d || cm.rows() != dc.dim(q, p) {
                        return Err(Error::Dimension(format!("conjugation at ({p},{q}) has the wrong shape")));
                    }
                }
            }
        }
        for p in 0..=n {
            for q in 0..=n {
                if !dc.del2(p, q).is_zero() || !dc.delbar2(p, q).is_zero() {
                    return Err(Error::Internal(format!("∂² or ∂̄² is nonzero at ({p},{q})")));
                }
                let anti = dc.ddbar(p, q).sub(&dc.dbar_del(p, q).scale(&G::from_i64(-1)));
                if !anti.is_zero() {
                    return Err(Error::Internal(format!("∂∂̄ + ∂̄∂ is nonzero at ({p},{q})")));
                }
            }
        }
        Ok(dc)
    }

    /// The full invariant complex Λ^{•,•} of an integrable coframe.
    pub fn from_coframe(cf: &Coframe) -> Result<Self> {
        if !cf.integrable() {
            return Err(Error::NonIntegrable);
        }
        let n = cf.n;
        let mut cells = Vec::new();
        let mut conj = Vec::new();
        for p in 0..=n {
            for q in 0..=n {
                let src = masks_of_bidegree(n, p, q);
                let mat = |dp: usize, dq: usize| -> Result<M> {
                    let dst = if p + dp <= n && q + dq <= n { masks_of_bidegree(n, p + dp, q + dq) } else { vec![] };
                    let mut cols = Vec::new();
                    for m in &src {
                        let f = CForm::mono(*m, G::one());
                        let g = if dp == 1 { cf.del(&f)? } else { cf.delbar(&f)? };
                        cols.push(g.coords(&dst));
                    }
                    Ok(M::from_fn(dst.len(), src.len(), |i, j| cols[j][i].clone()))
                };
                let (del, delbar) = (mat(1, 0)?, mat(0, 1)?);
                let dst = masks_of_bidegree(n, q, p);
                let cc: Vec<Vec<G>> = src.iter().map(|m| conj_form(n, &Form::mono(*m, G::one())).coords(&dst)).collect();
                conj.push(Some(M::from_fn(dst.len(), src.len(), |i, j| cc[j][i].clone())));
                cells.push(Cell { labels: src.iter().map(|m| render_mask(n, *m)).collect(), del, delbar });
            }
        }
        DoubleComplex::new(n, cells, Some(conj))
    }

    pub fn cell(&self, p: usize, q: usize) -> &Cell {
        &self.cells[p * (self.n + 1) + q]
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        if p > self.n || q > self.n {
            return 0;
        }
        self.cell(p, q).labels.len()
    }

    pub fn labels(&self, p: usize, q: usize) -> &[String] {
        if p > self.n || q > self.n {
            return &[];
        }
        &self.cell(p, q).labels
    }

    pub fn conjugation(&self, p: usize, q: usize) -> Option<&M> {
        self.conj.as_ref()?.get(p * (self.n + 1) + q)?.as_ref()
    }

    pub fn has_conjugation(&self) -> bool {
        self.conj.is_some()
    }

    /// ∂ out of (p,q); a 0-row or 0-column matrix outside the range.
    pub fn del(&self, p: usize, q: usize) -> M {
        if p > self.n || q > self.n {
            return M::zeros(self.dim(p + 1, q), 0);
        }
        self.cell(p, q).del.clone()
    }

    pub fn delbar(&self, p: usize, q: usize) -> M {
        if p > self.n || q > self.n {
            return M::zeros(self.dim(p, q + 1), 0);
        }
        self.cell(p, q).delbar.clone()
    }

    fn del2(&self, p: usize, q: usize) -> M {
        self.del(p + 1, q).mul(&self.del(p, q))
    }

    fn delbar2(&self, p: usize, q: usize) -> M {
        self.delbar(p, q + 1).mul(&self.delbar(p, q))
    }

    /// ∂∂̄ : (p,q) → (p+1,q+1)
    pub fn ddbar(&self, p: usize, q: usize) -> M {
        self.del(p, q + 1).mul(&self.delbar(p, q))
    }

    fn dbar_del(&self, p: usize, q: usize) -> M {
        self.delbar(p + 1, q).mul(&self.del(p, q))
    }

    /// Bidegrees of total degree k, in increasing p.
    fn strand(&self, k: usize) -> Vec<(usize, usize)> {
        (0..=k).filter(|&p| p <= self.n && k - p <= self.n).map(|p| (p, k - p)).collect()
    }

    fn offsets(&self, k: usize) -> (Vec<((usize, usize), usize)>, usize) {
        let mut off = Vec::new();
        let mut at = 0;
        for pq in self.strand(k) {
            off.push((pq, at));
            at += self.dim(pq.0, pq.1);
        }
        (off, at)
    }

    /// d = ∂ + ∂̄ on the total complex, degree k → k+1.
    pub fn total_d(&self, k: usize) -> M {
        let (src, ns) = self.offsets(k);
        let (dst, nd) = self.offsets(k + 1);
        let mut m = M::zeros(nd, ns);
        for &((p, q), so) in &src {
            for &((p2, q2), dof) in &dst {
                let block = if (p2, q2) == (p + 1, q) {
                    self.del(p, q)
                } else if (p2, q2) == (p, q + 1) {
                    self.delbar(p, q)
                } else {
                    continue;
                };
                for i in 0..block.rows() {
                    for j in 0..block.cols() {
                        m[(dof + i, so + j)] = block[(i, j)].clone();
                    }
                }
            }
        }
        m
    }

    pub fn cohomology(&self, theory: Theory) -> CohomologyTable {
        let n = self.n;
        let mut dims = Vec::new();
        if theory == Theory::DeRham {
            for k in 0..=2 * n {
                let (_, size) = self.offsets(k);
                let out = self.total_d(k).rank();
                let inc = if k == 0 { 0 } else { self.total_d(k - 1).rank() };
                dims.push(DimEntry { p: None, q: None, k: Some(k), dim: size - out - inc });
            }
            return CohomologyTable { theory, dims };
        }
        for k in 0..=2 * n {
            for (p, q) in self.strand(k) {
                dims.push(DimEntry { p: Some(p), q: Some(q), k: None, dim: self.bidegree_dim(theory, p, q) });
            }
        }
        CohomologyTable { theory, dims }
    }

    fn bidegree_dim(&self, theory: Theory, p: usize, q: usize) -> usize {
        let d = self.dim(p, q);
        match theory {
            Theory::Dolbeault => {
                let inc = if q == 0 { 0 } else { self.delbar(p, q - 1).rank() };
                d - self.delbar(p, q).rank() - inc
            }
            Theory::BottChern => {
                let closed = d - self.del(p, q).vstack(&self.delbar(p, q)).rank();
                closed - self.ddbar_into(p, q).len()
            }
            Theory::Aeppli => {
                let closed = d - self.ddbar(p, q).rank();
                closed - self.del_or_delbar_into(p, q).len()
            }
            Theory::DeRham => unreachable!(),
        }
    }

    /// Basis of im ∂∂̄ ⊂ Λ^{p,q}.
    fn ddbar_into(&self, p: usize, q: usize) -> Vec<Vec<G>> {
        if p == 0 || q == 0 {
            return vec![];
        }
        image(&self.ddbar(p - 1, q - 1))
    }

    /// Basis of im ∂ + im ∂̄ ⊂ Λ^{p,q}.
    fn del_or_delbar_into(&self, p: usize, q: usize) -> Vec<Vec<G>> {
        let mut vs = if p > 0 { cols_of(&self.del(p - 1, q)) } else { vec![] };
        if q > 0 {
            vs.extend(cols_of(&self.delbar(p, q - 1)));
        }
        independent(self.dim(p, q), vs)
    }

    fn del_into(&self, p: usize, q: usize) -> Vec<Vec<G>> {
        if p == 0 {
            return vec![];
        }
        image(&self.del(p - 1, q))
    }

    fn delbar_into(&self, p: usize, q: usize) -> Vec<Vec<G>> {
        if q == 0 {
            return vec![];
        }
        image(&self.delbar(p, q - 1))
    }

    /// Basis of im d ∩ Λ^{p,q}: images of total (k−1)-forms whose
    /// differential has no component outside (p,q).
    fn d_into(&self, p: usize, q: usize) -> Vec<Vec<G>> {
        let k = p + q;
        if k == 0 {
            return vec![];
        }
        let d = self.total_d(k - 1);
        let (dst, _) = self.offsets(k);
        let Some(&(_, at)) = dst.iter().find(|(pq, _)| *pq == (p, q)) else {
            return vec![];
        };
        let size = self.dim(p, q);
        let others: Vec<usize> = (0..d.rows()).filter(|i| *i < at || *i >= at + size).collect();
        let off = M::from_fn(others.len(), d.cols(), |i, j| d[(others[i], j)].clone());
        let ys = off.kernel_basis();
        let proj = M::from_fn(size, d.cols(), |i, j| d[(at + i, j)].clone());
        independent(size, ys.iter().map(|y| proj.mul_vec(y)).collect())
    }

    /// ker ∂ ∩ ker ∂̄ at (p,q).
    fn closed(&self, p: usize, q: usize) -> Vec<Vec<G>> {
        self.del(p, q).vstack(&self.delbar(p, q)).kernel_basis()
    }

    /// First counterexample to the ∂∂̄-lemma, scanning bidegrees in order
    /// of total degree and then d-, ∂-, ∂̄-exactness.
    pub fn ddbar_witness(&self) -> Option<DdbarWitness> {
        for k in 0..=2 * self.n {
            for (p, q) in self.strand(k) {
                let size = self.dim(p, q);
                if size == 0 {
                    continue;
                }
                let z = self.closed(p, q);
                let target = self.ddbar_into(p, q);
                for (ex, space) in [(Exactness::D, self.d_into(p, q)), (Exactness::Del, self.del_into(p, q)), (Exactness::Delbar, self.delbar_into(p, q))] {
                    let hits = intersect(size, &space, &z);
                    if hits.len() == target.len() {
                        continue;
                    }
                    let v = hits.into_iter().find(|v| !in_span(size, &target, v)).expect("intersection exceeds im ∂∂̄");
                    let form = render_coords(self.labels(p, q), &v);
                    return Some(DdbarWitness { p, q, exactness: ex, coords: v, form });
                }
            }
        }
        None
    }

    pub fn ddbar_lemma(&self) -> bool {
        self.ddbar_witness().is_none()
    }

    /// Sufficient condition for the ∂∂̄-lemma: ∂ = ∂̄ = 0 and conjugation
    /// maps each (p,q) bijectively onto (q,p).
    pub fn lemma_b_sufficient(&self) -> bool {
        if self.conj.is_none() {
            return false;
        }
        for p in 0..=self.n {
            for q in 0..=self.n {
                if !self.cell(p, q).del.is_zero() || !self.cell(p, q).delbar.is_zero() {
                    return false;
                }
                let d = self.dim(p, q);
                match self.conjugation(p, q) {
                    Some(m) if m.rows() == d && m.cols() == d && m.rank() == d => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Coordinates at (p,q) of a labelled combination; an unknown label
    /// means the form is not of type (p,q).
    pub fn coords_of(&self, p: usize, q: usize, form: &[(String, G)]) -> Result<Vec<G>> {
        let labels = self.labels(p, q);
        let mut v = vec![G::zero(); labels.len()];
        for (l, c) in form {
            let Some(i) = labels.iter().position(|x| x == l) else {
                return Err(Error::Dimension(format!("{l} is not a basis element of bidegree ({p},{q})")));
            };
            v[i] = v[i].clone() + c.clone();
        }
        Ok(v)
    }

    /// Checks that the forms are cocycles, independent in cohomology, as
    /// many as the dimension, and harmonic for the Laplacian built with
    /// conjugate transposes (basis taken orthonormal).
    pub fn verify_representatives(&self, theory: Theory, p: usize, q: usize, forms: &[Vec<(String, G)>]) -> Result<bool> {
        if theory == Theory::DeRham {
            return Err(Error::OutOfRange("representatives are checked for bigraded theories only".into()));
        }
        if p > self.n || q > self.n {
            return Err(Error::OutOfRange(format!("bidegree ({p},{q})")));
        }
        let xs = forms.iter().map(|f| self.coords_of(p, q, f)).collect::<Result<Vec<_>>>()?;
        let size = self.dim(p, q);
        let zero = |m: &M, x: &[G]| m.mul_vec(x).iter().all(gz);
        let adj = |m: M| m.conj_transpose();
        let none = M::zeros(0, size);
        let incoming_del = if p > 0 { adj(self.del(p - 1, q)) } else { none.clone() };
        let incoming_delbar = if q > 0 { adj(self.delbar(p, q - 1)) } else { none.clone() };
        let incoming_ddbar = if p > 0 && q > 0 { adj(self.ddbar(p - 1, q - 1)) } else { none.clone() };
        let (conditions, exact): (Vec<M>, Vec<Vec<G>>) = match theory {
            Theory::Dolbeault => (vec![self.delbar(p, q), incoming_delbar], self.delbar_into(p, q)),
            Theory::BottChern => (vec![self.del(p, q), self.delbar(p, q), incoming_ddbar], self.ddbar_into(p, q)),
            Theory::Aeppli => (vec![self.ddbar(p, q), incoming_del, incoming_delbar], self.del_or_delbar_into(p, q)),
            Theory::DeRham => unreachable!(),
        };
        // the first conditions are the cocycle ones; the rest are adjoint terms
        if !xs.iter().all(|x| conditions.iter().all(|m| zero(m, x))) {
            return Ok(false);
        }
        let mut all = exact.clone();
        all.extend(xs.iter().cloned());
        if span_dim(size, &all) != exact.len() + xs.len() {
            return Ok(false);
        }
        Ok(xs.len() == self.bidegree_dim(theory, p, q))
    }
}

pub fn render_coords(labels: &[String], v: &[G]) -> String {
    let terms: Vec<String> = labels.iter().zip(v).filter(|(_, c)| !gz(c)).map(|(l, c)| if c.is_one() { l.clone() } else { format!("({c})*{l}") }).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
