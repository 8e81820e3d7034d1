//! Invariant Hermitian structures on 3-dimensional complex coframes:
//! positivity, the special-metric conditions, and existence certificates.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::coframe::{masks_of_bidegree, omega, CForm, Coframe};
use crate::error::{Error, Result};
use crate::exterior::{Form, Mask};
use crate::matrix::ExactMatrix;
use crate::scalar::{q, qi, rational_str, GaussianRational, Rational};

type G = GaussianRational;

fn gz(x: &G) -> bool {
    crate::scalar::Field::is_zero(x)
}
fn g0() -> G {
    <G as crate::scalar::Field>::zero()
}
fn g1() -> G {
    <G as crate::scalar::Field>::one()
}
fn cj(x: &G) -> G {
    crate::scalar::Field::conj(x)
}

/// 2F = ir²ω^{11̄} + is²ω^{22̄} + it²ω^{33̄} + uω^{12̄} − ūω^{21̄} + vω^{23̄} − v̄ω^{32̄} + zω^{13̄} − z̄ω^{31̄}
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HermitianMetric {
    #[serde(serialize_with = "rational_str::serialize")]
    pub r2: Rational,
    #[serde(serialize_with = "rational_str::serialize")]
    pub s2: Rational,
    #[serde(serialize_with = "rational_str::serialize")]
    pub t2: Rational,
    pub u: G,
    pub v: G,
    pub z: G,
}

impl HermitianMetric {
    /// The normalized tuple (t², u, v, z) with r = s = 1.
    pub fn normalized(t2: Rational, u: G, v: G, z: G) -> Self {
        HermitianMetric { r2: qi(1), s2: qi(1), t2, u, v, z }
    }

    pub fn diagonal() -> Self {
        Self::normalized(qi(1), g0(), g0(), g0())
    }

    /// Real coordinates (r², s², t², Re u, Im u, Re v, Im v, Re z, Im z).
    pub fn coords(&self) -> [Rational; 9] {
        [
            self.r2.clone(),
            self.s2.clone(),
            self.t2.clone(),
            self.u.re.clone(),
            self.u.im.clone(),
            self.v.re.clone(),
            self.v.im.clone(),
            self.z.re.clone(),
            self.z.im.clone(),
        ]
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        HermitianMetric {
            r2: c[0].clone(),
            s2: c[1].clone(),
            t2: c[2].clone(),
            u: G::new(c[3].clone(), c[4].clone()),
            v: G::new(c[5].clone(), c[6].clone()),
            z: G::new(c[7].clone(), c[8].clone()),
        }
    }

    fn unit(k: usize) -> Self {
        let mut c: Vec<Rational> = vec![Rational::zero(); 9];
        c[k] = qi(1);
        Self::from_coords(&c)
    }
}

impl fmt::Display for HermitianMetric {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        use crate::scalar::fmt_rational as r;
        write!(f, "(r2={}, s2={}, t2={}, u={}, v={}, z={})", r(&self.r2), r(&self.s2), r(&self.t2), self.u, self.v, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricKind {
    Kahler,
    HermitianSymplectic,
    Skt,
    OneGauduchon,
    Balanced,
    StronglyGauduchon,
    Gauduchon,
}

impl MetricKind {
    pub const ALL: [MetricKind; 7] = [
        MetricKind::Kahler,
        MetricKind::HermitianSymplectic,
        MetricKind::Skt,
        MetricKind::OneGauduchon,
        MetricKind::Balanced,
        MetricKind::StronglyGauduchon,
        MetricKind::Gauduchon,
    ];

    /// Columns of the existence table.
    pub const TABLE: [MetricKind; 6] =
        [MetricKind::Kahler, MetricKind::HermitianSymplectic, MetricKind::Skt, MetricKind::OneGauduchon, MetricKind::Balanced, MetricKind::StronglyGauduchon];

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Kahler => "kahler",
            MetricKind::HermitianSymplectic => "hermitian_symplectic",
            MetricKind::Skt => "skt",
            MetricKind::OneGauduchon => "one_gauduchon",
            MetricKind::Balanced => "balanced",
            MetricKind::StronglyGauduchon => "strongly_gauduchon",
            MetricKind::Gauduchon => "gauduchon",
        }
    }

    /// Column header used in the existence table.
    pub fn header(self) -> &'static str {
        match self {
            MetricKind::Kahler => "Kahler",
            MetricKind::HermitianSymplectic => "H-symplectic",
            MetricKind::Skt => "SKT",
            MetricKind::OneGauduchon => "invariant 1-G",
            MetricKind::Balanced => "balanced",
            MetricKind::StronglyGauduchon => "sG",
            MetricKind::Gauduchon => "Gauduchon",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('-', "_");
        MetricKind::ALL.into_iter().find(|k| k.name() == t).ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown metric kind '{}'", s) })
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExistenceCertificate {
    pub kind: MetricKind,
    pub feasible: bool,
    pub witness: Option<HermitianMetric>,
    pub obstruction: Option<String>,
}

impl ExistenceCertificate {
    fn yes(kind: MetricKind, w: HermitianMetric) -> Self {
        ExistenceCertificate { kind, feasible: true, witness: Some(w), obstruction: None }
    }
    fn no(kind: MetricKind, why: String) -> Self {
        ExistenceCertificate { kind, feasible: false, witness: None, obstruction: Some(why) }
    }
}

// ---------------------------------------------------------------------------

const N: usize = 3;

/// The fundamental form F (half of the displayed 2F).
pub fn fundamental_form(m: &HermitianMetric) -> CForm {
    let half = G::real(q(1, 2));
    let i = G::i();
    let terms = [
        (1, 1, i.clone() * G::real(m.r2.clone())),
        (2, 2, i.clone() * G::real(m.s2.clone())),
        (3, 3, i * G::real(m.t2.clone())),
        (1, 2, m.u.clone()),
        (2, 1, -cj(&m.u)),
        (2, 3, m.v.clone()),
        (3, 2, -cj(&m.v)),
        (1, 3, m.z.clone()),
        (3, 1, -cj(&m.z)),
    ];
    let mut f = Form::zero();
    for (h, k, c) in terms {
        f = f.add(&omega(N, &[h], &[k], c * half.clone()));
    }
    f
}

pub fn is_positive(m: &HermitianMetric) -> bool {
    let (r2, s2, t2) = (&m.r2, &m.s2, &m.t2);
    let (nu, nv, nz) = (m.u.norm_sqr(), m.v.norm_sqr(), m.z.norm_sqr());
    let cross = (G::i() * cj(&m.u) * cj(&m.v) * m.z.clone()).re;
    r2.is_positive()
        && s2.is_positive()
        && t2.is_positive()
        && r2 * s2 > nu
        && s2 * t2 > nv
        && r2 * t2 > nz
        && r2 * s2 * t2 + qi(2) * cross > t2 * &nu + r2 * &nv + s2 * &nz
}

fn check_frame(cf: &Coframe) -> Result<()> {
    if cf.n != N {
        return Err(Error::Dimension(format!("metrics need complex dimension 3, got {}", cf.n)));
    }
    if !cf.integrable() {
        return Err(Error::NonIntegrable);
    }
    Ok(())
}

/// Matrix of ∂̄ (or ∂) from the monomials of `src` to those of `dst`.
fn op_matrix(cf: &Coframe, src: &[Mask], dst: &[Mask], bar: bool) -> Result<ExactMatrix<G>> {
    let mut cols = Vec::new();
    for m in src {
        let f = Form::mono(*m, g1());
        let img = if bar { cf.delbar(&f)? } else { cf.del(&f)? };
        cols.push(img.coords(dst));
    }
    Ok(ExactMatrix::from_columns(dst.len(), &cols))
}

/// ∂F^{2} is ∂̄-exact.
fn strongly_gauduchon(cf: &Coframe, f: &CForm) -> Result<bool> {
    let target = cf.del(&f.wedge(f))?;
    let src = masks_of_bidegree(N, 3, 1);
    let dst = masks_of_bidegree(N, 3, 2);
    let m = op_matrix(cf, &src, &dst, true)?;
    Ok(m.solve(&target.coords(&dst))?.is_some())
}

/// ∂̄F = ∂β and ∂̄β = 0 for some β of type (0,2).
fn hermitian_symplectic(cf: &Coframe, f: &CForm) -> Result<bool> {
    let src = masks_of_bidegree(N, 0, 2);
    let d12 = masks_of_bidegree(N, 1, 2);
    let d03 = masks_of_bidegree(N, 0, 3);
    let a = op_matrix(cf, &src, &d12, false)?.vstack(&op_matrix(cf, &src, &d03, true)?);
    let mut rhs = cf.delbar(f)?.coords(&d12);
    rhs.extend(std::iter::repeat_n(g0(), d03.len()));
    Ok(a.solve(&rhs)?.is_some())
}

pub fn metric_predicate(kind: MetricKind, m: &HermitianMetric, cf: &Coframe) -> Result<bool> {
    check_frame(cf)?;
    let f = fundamental_form(m);
    Ok(match kind {
        MetricKind::Kahler => cf.d(&f).is_zero(),
        MetricKind::Skt => cf.del(&cf.delbar(&f)?)?.is_zero(),
        MetricKind::OneGauduchon => cf.del(&cf.delbar(&f)?)?.wedge(&f).is_zero(),
        MetricKind::Balanced => cf.d(&f.wedge(&f)).is_zero(),
        MetricKind::Gauduchon => cf.del(&cf.delbar(&f.wedge(&f))?)?.is_zero(),
        MetricKind::StronglyGauduchon => strongly_gauduchon(cf, &f)?,
        MetricKind::HermitianSymplectic => hermitian_symplectic(cf, &f)?,
    })
}

// ---------------------------------------------------------------------------
// existence

const COORD_NAMES: [&str; 3] = ["r^2", "s^2", "t^2"];

/// Real matrix of an ℝ-linear map given by the images of the unknowns.
fn real_matrix(images: &[CForm]) -> ExactMatrix<Rational> {
    let mut masks: Vec<Mask> = images.iter().flat_map(|f| f.terms.keys().copied()).collect();
    masks.sort_unstable();
    masks.dedup();
    let cols: Vec<Vec<Rational>> = images
        .iter()
        .map(|f| {
            let c = f.coords(&masks);
            c.iter().map(|x| x.re.clone()).chain(c.iter().map(|x| x.im.clone())).collect()
        })
        .collect();
    ExactMatrix::from_columns(2 * masks.len(), &cols)
}

/// First diagonal metric coordinate that vanishes on the whole solution space.
fn forced_zero(images: &[CForm], diag: usize) -> Option<usize> {
    let m = real_matrix(images);
    let ker = if m.rows() == 0 {
        (0..images.len()).map(|k| (0..images.len()).map(|j| if j == k { qi(1) } else { qi(0) }).collect()).collect()
    } else {
        m.kernel_basis()
    };
    (0..diag).find(|&k| ker.iter().all(|v: &Vec<Rational>| v[k].is_zero()))
}

fn candidates() -> Vec<HermitianMetric> {
    let vals = [g0(), G::real(q(1, 2)), G::new(qi(0), q(1, 2))];
    let mut out = vec![HermitianMetric::diagonal()];
    for t2 in [qi(1), qi(4)] {
        for u in &vals {
            for v in &vals {
                for z in &vals {
                    let m = HermitianMetric::normalized(t2.clone(), u.clone(), v.clone(), z.clone());
                    if is_positive(&m) && !out.contains(&m) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

fn search(kind: MetricKind, cf: &Coframe) -> Result<Option<HermitianMetric>> {
    for m in candidates() {
        if metric_predicate(kind, &m, cf)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn unit_forms() -> Vec<CForm> {
    (0..9).map(|k| fundamental_form(&HermitianMetric::unit(k))).collect()
}

/// Linear obstruction for Kähler, SKT and Hermitian-symplectic.
fn linear_obstruction(kind: MetricKind, cf: &Coframe) -> Result<Option<String>> {
    let units = unit_forms();
    let (images, what) = match kind {
        MetricKind::Kahler => (units.iter().map(|f| cf.d(f)).collect::<Vec<_>>(), "dF = 0"),
        MetricKind::Skt => (units.iter().map(|f| cf.del(&cf.delbar(f)?)).collect::<Result<Vec<_>>>()?, "ddbar F = 0"),
        MetricKind::HermitianSymplectic => {
            // unknowns: the 9 metric coordinates, then Re/Im of β on Λ^{0,2};
            // equations (∂̄F − ∂β, ∂̄β) with the two parts kept apart by type
            let mut imgs = Vec::new();
            for f in &units {
                imgs.push(cf.delbar(f)?);
            }
            for m in masks_of_bidegree(N, 0, 2) {
                for c in [g1(), G::i()] {
                    let b = Form::mono(m, c);
                    imgs.push(cf.del(&b)?.scale(&G::real(qi(-1))).add(&cf.delbar(&b)?));
                }
            }
            (imgs, "dbar F = del beta, dbar beta = 0")
        }
        _ => return Ok(None),
    };
    Ok(forced_zero(&images, 3).map(|k| format!("{} forces {} = 0 on every solution", what, COORD_NAMES[k])))
}

/// ∂∂̄F∧F = (P r²s² + R |u|²)·vol when the quadratic form has that shape.
fn one_gauduchon_form(cf: &Coframe) -> Result<Option<(G, G)>> {
    let units = unit_forms();
    let ddb: Vec<CForm> = units.iter().map(|f| cf.del(&cf.delbar(f)?)).collect::<Result<_>>()?;
    let top: Mask = (1 << (2 * N)) - 1;
    let b = |i: usize, j: usize| ddb[i].wedge(&units[j]).coeff(top) + ddb[j].wedge(&units[i]).coeff(top);
    let mut p = g0();
    let mut r = g0();
    for i in 0..9 {
        for j in i..9 {
            let c = if i == j { ddb[i].wedge(&units[i]).coeff(top) } else { b(i, j) };
            match (i, j) {
                (0, 1) => p = c,
                (3, 3) => r = c.clone(),
                (4, 4) => {
                    if c != r {
                        return Ok(None);
                    }
                }
                _ => {
                    if !gz(&c) {
                        return Ok(None);
                    }
                }
            }
        }
    }
    Ok(Some((p, r)))
}

fn one_gauduchon_exists(cf: &Coframe) -> Result<ExistenceCertificate> {
    let kind = MetricKind::OneGauduchon;
    let (p, r) = one_gauduchon_form(cf)?.ok_or_else(|| Error::Internal("ddbar F ^ F is not of the form P r^2 s^2 + R |u|^2".into()))?;
    if gz(&p) {
        return Ok(ExistenceCertificate::yes(kind, HermitianMetric::diagonal()));
    }
    if gz(&r) {
        return Ok(ExistenceCertificate::no(kind, format!("ddbar F ^ F = ({})·r^2 s^2·vol and r^2 s^2 > 0", p)));
    }
    // zero iff |u|² = ρ r²s² with ρ = −P/R
    let rho = -(p.clone() / r.clone());
    if !rho.is_real() || !rho.re.is_positive() || rho.re >= qi(1) {
        return Ok(ExistenceCertificate::no(kind, format!("ddbar F ^ F = (({})·r^2 s^2 + ({})·|u|^2)·vol has no zero with |u|^2 < r^2 s^2", p, r)));
    }
    let s2 = qi(1) / (qi(4) * &rho.re);
    let w = HermitianMetric { r2: qi(1), s2: s2.clone(), t2: qi(1) + s2, u: G::real(q(1, 2)), v: g0(), z: g0() };
    Ok(ExistenceCertificate::yes(kind, w))
}

/// Structure equations of the nilpotent factor: drop ω^n, ω̄^n.
fn nilpotent_factor(cf: &Coframe) -> Coframe {
    let n = cf.n;
    let keep = |m: Mask| m >> (n - 1) & 1 == 0 && m >> (2 * n - 1) & 1 == 0;
    let sigma: Vec<usize> = (0..2 * n).map(|i| if i < n { i } else { i - 1 }).collect();
    let dw = cf.dw[..n - 1].iter().map(|f| f.filter(keep).relabel(&sigma)).collect();
    Coframe { n: n - 1, dw }
}

/// Balanced or strongly Gauduchon at the level of the nilpotent factor, where
/// (in complex dimension 3) the conditions become dF_N = 0 and ∂F_N ∈ im ∂̄.
fn factor_obstruction(kind: MetricKind, cf: &Coframe) -> Result<Option<String>> {
    let nf = nilpotent_factor(cf);
    let half = G::real(q(1, 2));
    let units: Vec<CForm> = vec![
        omega(2, &[1], &[1], G::i() * half.clone()),
        omega(2, &[2], &[2], G::i() * half.clone()),
        omega(2, &[1], &[2], half.clone()).add(&omega(2, &[2], &[1], -half.clone())),
        omega(2, &[1], &[2], G::i() * half.clone()).add(&omega(2, &[2], &[1], G::i() * half)),
    ];
    let (images, what) = match kind {
        MetricKind::Balanced => (units.iter().map(|f| nf.d(f)).collect::<Vec<_>>(), "d F_N = 0 on the nilpotent factor"),
        MetricKind::StronglyGauduchon => {
            let mut imgs: Vec<CForm> = units.iter().map(|f| nf.del(f)).collect::<Result<_>>()?;
            for c in [g1(), G::i()] {
                imgs.push(nf.delbar(&Form::mono(0b11, c))?.scale(&G::real(qi(-1))));
            }
            (imgs, "del F_N in im dbar on the nilpotent factor")
        }
        _ => return Ok(None),
    };
    Ok(forced_zero(&images, 2).map(|k| format!("{} forces {} = 0", what, COORD_NAMES[k])))
}

/// A + B̄ for the C2 family read off the structure equations, when ω³ is closed
/// and dω¹ = Aω^{13} + Bω^{13̄}.
fn a_plus_conj_b(cf: &Coframe) -> Option<G> {
    if !cf.dw[2].is_zero() {
        return None;
    }
    let a = cf.dw[0].coeff(0b000101);
    let b = cf.dw[0].coeff(0b100001);
    Some(a + cj(&b))
}

pub fn exists_metric(kind: MetricKind, cf: &Coframe) -> Result<ExistenceCertificate> {
    check_frame(cf)?;
    match kind {
        MetricKind::OneGauduchon => return one_gauduchon_exists(cf),
        MetricKind::Kahler | MetricKind::Skt | MetricKind::HermitianSymplectic => {
            if let Some(why) = linear_obstruction(kind, cf)? {
                let why = match a_plus_conj_b(cf) {
                    Some(s) if !gz(&s) => format!("A + conj(B) = {} != 0; {}", s, why),
                    _ => why,
                };
                return Ok(ExistenceCertificate::no(kind, why));
            }
        }
        MetricKind::Balanced | MetricKind::StronglyGauduchon => {
            if let Some(why) = factor_obstruction(kind, cf)? {
                return Ok(ExistenceCertificate::no(kind, why));
            }
        }
        MetricKind::Gauduchon => {}
    }
    match search(kind, cf)? {
        Some(w) => Ok(ExistenceCertificate::yes(kind, w)),
        None => Err(Error::Internal(format!("no certificate either way for {}", kind))),
    }
}

/// The ✓/− matrix of the existence table, rows s1…s12, columns `MetricKind::TABLE`.
pub const EXISTENCE_TABLE: [[bool; 6]; 12] = {
    const Y: [bool; 6] = [true; 6];
    const B: [bool; 6] = [false, false, false, false, true, true];
    [[false, false, true, true, false, false], Y, Y, B, B, B, Y, B, B, B, B, B]
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableCell {
    /// every sampled structure admits the metric
    All,
    /// no sampled structure admits it
    None,
    Mixed,
}

impl TableCell {
    pub fn symbol(self) -> &'static str {
        match self {
            TableCell::All => "✓",
            TableCell::None => "−",
            TableCell::Mixed => "?",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MetricTableRow {
    pub algebra: usize,
    pub structures: usize,
    pub cells: Vec<TableCell>,
}

/// Existence certificates for every table column on one structure.
pub fn certificates(cf: &Coframe) -> Result<Vec<ExistenceCertificate>> {
    MetricKind::TABLE.iter().map(|k| exists_metric(*k, cf)).collect()
}

/// Existence table over a sample of structures, grouped by the algebra
/// the classifier assigns to each.
pub fn metric_table(samples: &[crate::coframe::SplittingParams]) -> Result<Vec<MetricTableRow>> {
    let mut seen: Vec<Vec<Vec<bool>>> = vec![Vec::new(); 12];
    for p in samples {
        let k = crate::classify::classify(p)?.label.index();
        let cf = crate::coframe::splitting_coframe(p);
        seen[k - 1].push(certificates(&cf)?.iter().map(|c| c.feasible).collect());
    }
    Ok(seen
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_empty())
        .map(|(i, v)| {
            let cells = (0..6)
                .map(|c| {
                    let n = v.iter().filter(|r| r[c]).count();
                    if n == v.len() {
                        TableCell::All
                    } else if n == 0 {
                        TableCell::None
                    } else {
                        TableCell::Mixed
                    }
                })
                .collect();
            MetricTableRow { algebra: i + 1, structures: v.len(), cells }
        })
        .collect())
}
