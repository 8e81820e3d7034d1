//! Decision procedure from splitting parameters (A, B, ε) to the catalog,
//! with a real basis change that is re-verified on every answer.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coframe::{splitting_coframe, Family, SplittingParams};
use crate::error::{Error, Result};
use crate::lie::{appendix_change, catalog_unchecked, verify_isomorphism, AppendixChange, BasisChange, CatalogLabel};
use crate::matrix::ExactMatrix;
use crate::scalar::{q, qi, rational_str, GaussianRational, Rational};

type G = GaussianRational;
type Dict = [[G; 6]; 3];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseInvariants {
    #[serde(serialize_with = "rational_str::serialize")]
    pub delta: Rational,
    #[serde(serialize_with = "rational_str::option")]
    pub x: Option<Rational>,
    #[serde(serialize_with = "rational_str::option")]
    pub y: Option<Rational>,
}

/// Δ = (ImA − ImB)² + (2 + ReA + ReB)(ReA + ReB); X and Y when ImA ≠ ImB.
pub fn case_invariants(a: &G, b: &G) -> CaseInvariants {
    let d = &a.im - &b.im;
    let s = &a.re + &b.re;
    let delta = &d * &d + (qi(2) + &s) * &s;
    if d.is_zero() {
        return CaseInvariants { delta, x: None, y: None };
    }
    let x = (a.norm_sqr() - b.norm_sqr()) / &d;
    let y = qi(2) * (&a.im * (qi(1) + &b.re) + &b.im * (qi(1) + &a.re)) / &d;
    CaseInvariants { delta, x: Some(x), y: Some(y) }
}

/// X and Y, which need ImA ≠ ImB.
pub fn case_xy(a: &G, b: &G) -> Result<(Rational, Rational)> {
    let inv = case_invariants(a, b);
    match (inv.x, inv.y) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::Degenerate("X and Y need Im A ≠ Im B".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionStep {
    pub change: Option<AppendixChange>,
    pub lambda: Option<String>,
    pub from: CatalogLabel,
    pub to: CatalogLabel,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub label: CatalogLabel,
    pub raw_label: CatalogLabel,
    /// e = m·α, where α is the real basis with ω^j = α^{2j−1} + iα^{2j}.
    pub basis_change: BasisChange,
    pub row: String,
    pub reductions: Vec<ReductionStep>,
}

// ---------------------------------------------------------------------------
// dictionaries ω^j = Σ c_jk e^k

fn re(x: Rational) -> G {
    G::real(x)
}
fn im(x: Rational) -> G {
    G::new(Rational::zero(), x)
}
fn cj(x: &G) -> G {
    crate::scalar::Field::conj(x)
}
fn one() -> Rational {
    Rational::one()
}

/// Row with the given (1-based index, coefficient) entries.
fn w(terms: &[(usize, G)]) -> [G; 6] {
    let mut r: [G; 6] = std::array::from_fn(|_| G::real(Rational::zero()));
    for (k, c) in terms {
        r[k - 1] = r[k - 1].clone() + c.clone();
    }
    r
}

/// e^a + i e^b with signs.
fn pair(a: usize, sa: i64, b: usize, sb: i64) -> [G; 6] {
    w(&[(a, re(qi(sa))), (b, im(qi(sb)))])
}

fn sign(x: &Rational) -> i64 {
    if x.is_negative() {
        -1
    } else {
        1
    }
}

struct Row {
    name: &'static str,
    hit: bool,
    build: Box<dyn Fn() -> (CatalogLabel, Dict)>,
}

fn row(name: &'static str, hit: bool, build: impl Fn() -> (CatalogLabel, Dict) + 'static) -> Row {
    Row { name, hit, build: Box::new(build) }
}

fn pick(group: &str, rows: Vec<Row>) -> Result<(String, CatalogLabel, Dict)> {
    let fired: Vec<&Row> = rows.iter().filter(|r| r.hit).collect();
    match fired.as_slice() {
        [r] => {
            let (label, dict) = (r.build)();
            Ok((format!("{}: {}", group, r.name), label, dict))
        }
        [] => Err(Error::Internal(format!("no row of '{}' applies", group))),
        many => Err(Error::Internal(format!("rows {:?} of '{}' overlap", many.iter().map(|r| r.name).collect::<Vec<_>>(), group))),
    }
}

fn kt_row() -> (String, CatalogLabel, Dict) {
    let dict = [pair(3, 1, 2, -1), w(&[(5, re(qi(2))), (1, im(qi(-2)))]), w(&[(6, re(q(1, 2))), (4, im(q(-1, 2)))])];
    ("KT, eps=1".into(), CatalogLabel::S1, dict)
}

fn eps0_rows(a: &G, b: &G) -> Result<(String, CatalogLabel, Dict, G)> {
    let group = "eps=0";
    if crate::scalar::Field::is_zero(a) && crate::scalar::Field::is_zero(b) {
        return Err(Error::Degenerate("A = B = 0 with ε = 0 is the trivial action".into()));
    }
    if *b == -cj(a) {
        let dict = [pair(3, 1, 2, 1), pair(4, 1, 5, 1), w(&[(6, re(one())), (1, im(q(1, 2)))])];
        return Ok((format!("{}: A=-conj(B)!=0", group), CatalogLabel::S2, dict, a.clone()));
    }
    // ω'³ = c ω³ with c = −(A + B̄) puts A' = −1 − B̄'
    let c = -(a.clone() + cj(b));
    let bp = b.clone() / cj(&c);
    let (rb, ib) = (bp.re.clone(), bp.im.clone());
    let real = ib.is_zero();
    let rows = vec![
        row("B=-1", real && rb == qi(-1), || (CatalogLabel::S12, [pair(4, 1, 3, 1), pair(1, -1, 2, -1), pair(6, 1, 5, 1)])),
        row("B=-1/2", real && rb == q(-1, 2), || (CatalogLabel::S9, [pair(1, 1, 2, 1), pair(3, 1, 4, 1), pair(6, 1, 5, 1)])),
        row("B=0", real && rb.is_zero(), || (CatalogLabel::S12, [pair(3, 1, 4, 1), pair(1, 1, 2, 1), pair(6, 1, 5, 1)])),
        {
            let rb = rb.clone();
            row("B real, B!=-1,-1/2,0", real && rb != qi(-1) && rb != q(-1, 2) && !rb.is_zero(), move || {
                (CatalogLabel::S11(qi(-1) - qi(2) * &rb), [pair(3, 1, 4, 1), pair(1, 1, 2, 1), pair(6, 1, 5, 1)])
            })
        },
        {
            let (rb, ib) = (rb.clone(), ib.clone());
            row("Im B!=0", !real, move || {
                let beta = (qi(1) + qi(2) * &rb) / (qi(2) * &ib);
                let alpha = qi(2) * &ib;
                (CatalogLabel::S10(alpha, beta.clone()), [pair(3, 1, 4, 1), pair(1, 1, 2, 1), w(&[(5, re(one())), (6, re(beta)), (6, im(one()))])])
            })
        },
    ];
    let (name, label, dict) = pick(group, rows)?;
    Ok((name, label, dict, c))
}

fn eps1_real(a: Rational, b: Rational) -> Result<(String, CatalogLabel, Dict)> {
    let m1 = qi(-1);
    let rows = vec![
        row("A=-B=0", a.is_zero() && b.is_zero(), || (CatalogLabel::S2, [pair(4, 1, 5, 1), pair(3, 1, 2, 1), w(&[(6, re(qi(-1))), (1, im(q(-1, 2)))])])),
        {
            let a = a.clone();
            row("A=-B!=0", a == -b.clone() && !a.is_zero(), move || {
                (CatalogLabel::S7(a.abs()), [pair(3, -sign(&a), 4, 1), pair(1, 1, 2, 1), w(&[(6, re(one())), (5, im(q(1, 2)))])])
            })
        },
        row("A=B=-1", a == b && a == m1, || (CatalogLabel::S4, [pair(1, 1, 4, 1), pair(3, 1, 2, 1), w(&[(5, re(q(-1, 2))), (6, im(one()))])])),
        {
            let a = a.clone();
            row("A=B!=0,-1", a == b && !a.is_zero() && a != m1, move || {
                let c6 = -(one() / (qi(2) * &a));
                let c5 = -(one() / (qi(2) * (&a + one())));
                (CatalogLabel::S9, [pair(1, 1, 2, 1), pair(3, 1, 4, 1), w(&[(6, re(c6)), (5, im(c5))])])
            })
        },
        {
            let b = b.clone();
            row("A!=+-B, A=-1", a != b && a != -b.clone() && a == m1, move || {
                let c6 = one() / (&b - one());
                let c5 = -(one() / (&b + one()));
                (CatalogLabel::S12, [pair(1, 1, 2, 1), pair(4, 1, 3, 1), w(&[(6, re(c6)), (5, im(c5))])])
            })
        },
        {
            let a = a.clone();
            row("A!=+-B, B=-1", a != b && a != -b.clone() && b == m1, move || {
                let c6 = one() / (&a - one());
                let c5 = one() / (&a + one());
                (CatalogLabel::S12, [pair(1, 1, 2, 1), pair(3, 1, 4, 1), w(&[(6, re(c6)), (5, im(c5))])])
            })
        },
        {
            let a = a.clone();
            let s = &a + &b;
            row("A!=+-B, A+B=-2", a != b && a != -b.clone() && s == qi(-2), move || {
                let c5 = one() / (qi(2) * (&a + one()));
                (CatalogLabel::S9, [pair(3, 1, 4, 1), pair(1, 1, 2, 1), w(&[(6, re(q(-1, 2))), (5, im(c5))])])
            })
        },
        {
            let (a, b) = (a.clone(), b.clone());
            let s = &a + &b;
            let hit = a != b && a != -b.clone() && s != qi(-2) && a != m1 && b != m1;
            row("A!=+-B, A+B!=-2, A,B!=-1", hit, move || {
                let alpha = (qi(2) + &a + &b) / (&b - &a);
                let c6 = one() / (&a + &b);
                let c5 = one() / (&a - &b);
                (CatalogLabel::S11(alpha), [pair(1, 1, 2, 1), pair(3, 1, 4, 1), w(&[(6, re(c6)), (5, im(c5))])])
            })
        },
    ];
    pick("eps=1, ImA=ImB=0", rows)
}

fn eps1_equal_im(a: &G, b: &G) -> Result<(String, CatalogLabel, Dict)> {
    let m = a.im.clone();
    let (ra, rb) = (a.re.clone(), b.re.clone());
    let s = &ra + &rb;
    let m1 = qi(-1);
    let rows = vec![
        {
            let (m, ra) = (m.clone(), ra.clone());
            row("ReA=-ReB", s.is_zero(), move || {
                let k = one() / (qi(2) * &m);
                let c3 = w(&[(1, re(k.clone())), (4, re(-(k * &ra))), (4, im(q(1, 2)))]);
                (CatalogLabel::S3, [pair(2, 1, 3, -1), pair(5, 1, 6, 1), c3])
            })
        },
        {
            let m = m.clone();
            row("ReA=ReB=-1", ra == rb && ra == m1, move || {
                (CatalogLabel::S5(m.abs()), [pair(3, -sign(&m), 4, 1), pair(1, 1, 2, 1), w(&[(5, re(q(1, 2))), (6, im(one()))])])
            })
        },
        {
            let (m, ra) = (m.clone(), ra.clone());
            row("ReA=ReB!=0,-1", ra == rb && !ra.is_zero() && ra != m1, move || {
                let c5 = -(one() / (qi(2) * &ra));
                let c6 = -(one() / (qi(2) * (&ra + one())));
                (CatalogLabel::S10(-(&m / &ra), Rational::zero()), [pair(3, 1, 4, 1), pair(1, 1, 2, 1), w(&[(5, re(c5)), (6, im(c6))])])
            })
        },
        {
            let (m, ra) = (m.clone(), ra.clone());
            row("ReA!=+-ReB, ReA+ReB=-2", ra != rb && ra != -rb.clone() && s == qi(-2), move || {
                let k = one() / (qi(2) * (&ra + one()));
                let c3 = w(&[(6, re(q(-1, 2))), (5, im(k.clone())), (6, im(k * &m))]);
                (CatalogLabel::S9, [pair(3, 1, 4, 1), pair(1, 1, 2, 1), c3])
            })
        },
        {
            let (m, ra, rb) = (m.clone(), ra.clone(), rb.clone());
            let s = s.clone();
            let hit = ra != rb && ra != -rb.clone() && s != qi(-2);
            row("ReA!=+-ReB, ReA+ReB!=-2", hit, move || {
                let dsq = &ra * &ra - &rb * &rb;
                let alpha = qi(2) * &m * (qi(2) + &s) / &dsq;
                let beta = &s / (qi(2) * &m);
                let c3 = w(&[(5, re(one() / &s)), (6, re(one() / (qi(2) * &m))), (5, im(-(qi(2) * &m / &dsq)))]);
                (CatalogLabel::S10(alpha, beta), [pair(1, 1, 2, 1), pair(3, 1, 4, 1), c3])
            })
        },
    ];
    pick("eps=1, ImA=ImB!=0", rows)
}

fn eps1_delta_zero(a: &G, b: &G) -> Result<(String, CatalogLabel, Dict)> {
    let (ra, ia, rb, ib) = (a.re.clone(), a.im.clone(), b.re.clone(), b.im.clone());
    let d = &ia - &ib;
    let s = &ra + &rb;
    let na = a.norm_sqr();
    let nb = b.norm_sqr();
    let same_norm = na == nb;
    let conj = *b == cj(a);
    let m1 = qi(-1);
    let rows = vec![
        {
            let (ra, ia) = (ra.clone(), ia.clone());
            row("|A|=|B|, B=conj(A)", same_norm && conj, move || {
                let k = one() / (qi(2) * &ia);
                let t = &ia / (one() + &ra);
                let c3 = w(&[(6, re(k.clone())), (5, im(-k.clone())), (6, im(-(k * t)))]);
                (CatalogLabel::S5(-((one() + &ra) / &ia)), [pair(1, 1, 2, 1), pair(3, 1, 4, 1), c3])
            })
        },
        {
            let (ra, ia) = (ra.clone(), ia.clone());
            row("|A|=|B|, B!=conj(A), B=-1, ImA!=0", same_norm && !conj && *b == re(m1.clone()) && !ia.is_zero(), move || {
                let k = one() / (one() + &ra);
                let c3 = w(&[(6, re(one() / &ia)), (5, im(-k.clone())), (6, im(-k))]);
                (CatalogLabel::S8(&ia / (one() + &ra)), [pair(1, 1, 2, 1), pair(4, 1, 3, 1), c3])
            })
        },
        {
            let (rb, ib) = (rb.clone(), ib.clone());
            row("|A|=|B|, B!=conj(A), A=-1, ImB!=0", same_norm && !conj && *a == re(m1.clone()) && !ib.is_zero(), move || {
                let k = one() / (one() + &rb);
                let c3 = w(&[(6, re(-(one() / &ib))), (5, im(k.clone())), (6, im(-k))]);
                (CatalogLabel::S8(&ib / (one() + &rb)), [pair(1, 1, 2, 1), pair(3, 1, 4, 1), c3])
            })
        },
        {
            let (ra, rb, d, s) = (ra.clone(), rb.clone(), d.clone(), s.clone());
            let hit = same_norm && !conj && ra != rb && ra != m1 && rb != m1 && !(&ia * &ib).is_zero();
            row("|A|=|B|, B!=conj(A), ReA!=ReB, ReA,ReB!=-1, ImA*ImB!=0", hit, move || {
                let dr = &ra - &rb;
                let c3 = w(&[(6, re(one() / &d)), (5, im(-(one() / &dr))), (6, im(&s / (&d * &d)))]);
                (CatalogLabel::S6(&d / &dr, -((qi(2) + &s) / &dr)), [pair(1, 1, 2, 1), pair(3, 1, 4, 1), c3])
            })
        },
        {
            let (ra, rb, ia, ib, d, s) = (ra.clone(), rb.clone(), ia.clone(), ib.clone(), d.clone(), s.clone());
            let den = &na - &nb;
            row("|A|!=|B|", !same_norm, move || {
                let c3 = w(&[(5, re((&ra - &rb) / &den)), (6, re(&d / &den)), (5, im(-((&ia + &ib) / &den))), (6, im(&s / &den))]);
                (CatalogLabel::S10((qi(2) + &s) / &d, Rational::zero()), [pair(1, 1, 2, 1), pair(3, 1, 4, 1), c3])
            })
        },
    ];
    pick("eps=1, ImA!=ImB, Delta=0", rows)
}

fn eps1_delta_nonzero(a: &G, b: &G) -> Result<(String, CatalogLabel, Dict)> {
    let inv = case_invariants(a, b);
    let (x, y) = case_xy(a, b)?;
    let delta = inv.delta;
    let (ra, ia) = (a.re.clone(), a.im.clone());
    let d = &a.im - &b.im;
    let s = &a.re + &b.re;
    let na = a.norm_sqr();
    let same_norm = na == b.norm_sqr();
    let diff = &na - &b.norm_sqr();
    let plus = delta == diff;
    let pm = plus || delta == -diff.clone();
    // shared by the s12 and s11 rows
    let swap_dict = {
        let (d, s, delta) = (d.clone(), s.clone(), delta.clone());
        move |s4: i64| -> Dict {
            let k = &d / &delta;
            let c3 = w(&[(5, re(k.clone())), (6, re(-(k.clone() * (qi(2) + &s) / &d))), (5, im(k.clone() * &s / &d)), (6, im(k))]);
            [pair(3, 1, 4, s4), pair(1, 1, 2, -1), c3]
        }
    };
    let rows = vec![
        {
            let (ra, ia, na) = (ra.clone(), ia.clone(), na.clone());
            row("|A|=|B|, Y=0", same_norm && y.is_zero(), move || {
                let k = &ia / (qi(2) * (&na + &ra));
                let c3 = w(&[(5, re(-k.clone())), (6, re(-(k.clone() * (one() + &ra) / &ia))), (5, im(-(k.clone() * &ra / &ia))), (6, im(k))]);
                (CatalogLabel::S9, [pair(1, 1, 2, 1), pair(3, 1, 4, 1), c3])
            })
        },
        {
            let (d, s, delta, y) = (d.clone(), s.clone(), delta.clone(), y.clone());
            row("|A|=|B|, Y!=0", same_norm && !y.is_zero(), move || {
                let k = &d / &delta;
                let c3 = w(&[(6, re(k.clone())), (5, re(-(k.clone() * (qi(2) + &s) / &d))), (5, im(k.clone())), (6, im(k * &s / &d))]);
                (CatalogLabel::S10(-(&y * &d / &delta), Rational::zero()), [pair(3, 1, 4, 1), pair(1, 1, 2, -1), c3])
            })
        },
        {
            let f = swap_dict.clone();
            row("|A|!=|B|, Y=0, Delta=+-(|A|^2-|B|^2)", !same_norm && y.is_zero() && pm, move || (CatalogLabel::S12, f(if plus { -1 } else { 1 })))
        },
        {
            let f = swap_dict.clone();
            let (x, d, delta) = (x.clone(), d.clone(), delta.clone());
            row("|A|!=|B|, Y=0, Delta!=+-(|A|^2-|B|^2)", !same_norm && y.is_zero() && !pm, move || (CatalogLabel::S11(-(&x * &d / &delta)), f(-1)))
        },
        {
            let (x, y, d, s, delta) = (x.clone(), y.clone(), d.clone(), s.clone(), delta.clone());
            row("|A|!=|B|, Y!=0", !same_norm && !y.is_zero(), move || {
                let two_s = qi(2) + &s;
                let c3 = w(&[
                    (5, re((&x * &two_s - &y * &d) / (&x * &delta))),
                    (6, re(&two_s / (&y * &d))),
                    (6, im(-(one() / &y))),
                    (5, im(-((&x * &d + &y * &s) / (&x * &delta)))),
                ]);
                (CatalogLabel::S10(&y / &x, &delta / (&y * &d)), [pair(1, 1, 2, 1), pair(3, 1, 4, 1), c3])
            })
        },
    ];
    pick("eps=1, ImA!=ImB, Delta!=0", rows)
}

/// Real change e = m·α from the dictionary for the gauged coframe
/// ω' = diag(1, 1, g)·ω.
fn change_from_dict(dict: &Dict, g: &G) -> Result<BasisChange> {
    // original ω³ = ω'³ / g
    let ginv = G::real(one()) / g.clone();
    let mut p = ExactMatrix::zeros(6, 6);
    for (j, r) in dict.iter().enumerate() {
        for k in 0..6 {
            let c = if j == 2 { r[k].clone() * ginv.clone() } else { r[k].clone() };
            p[(2 * j, k)] = c.re.clone();
            p[(2 * j + 1, k)] = c.im.clone();
        }
    }
    let pinv = p.inverse().map_err(|_| Error::Internal("dictionary is not a basis".into()))?;
    BasisChange::new(pinv)
}

pub fn classify(params: &SplittingParams) -> Result<ClassificationResult> {
    let (row, raw, dict, gauge) = match params.family {
        Family::KT => {
            if params.eps == 0 {
                return Err(Error::Degenerate("KT family with ε = 0 is nilpotent".into()));
            }
            let (r, l, d) = kt_row();
            (r, l, d, G::real(one()))
        }
        Family::C2 => {
            let (a, b) = (&params.a, &params.b);
            if params.eps == 0 {
                eps0_rows(a, b)?
            } else {
                let (r, l, d) = if a.im == b.im {
                    if a.im.is_zero() {
                        eps1_real(a.re.clone(), b.re.clone())?
                    } else {
                        eps1_equal_im(a, b)?
                    }
                } else if case_invariants(a, b).delta.is_zero() {
                    eps1_delta_zero(a, b)?
                } else {
                    eps1_delta_nonzero(a, b)?
                };
                (r, l, d, G::real(one()))
            }
        }
    };
    let src = splitting_coframe(params).realify()?;
    let m = change_from_dict(&dict, &gauge)?;
    if !verify_isomorphism(&src, &catalog_unchecked(&raw), &m)? {
        return Err(Error::Internal(format!("basis change of row '{}' does not verify", row)));
    }
    let (label, n, reductions) = normalize_label(&raw);
    let total = m.then(&n);
    if !verify_isomorphism(&src, &crate::lie::catalog(&label)?, &total)? {
        return Err(Error::Internal(format!("normalized change for {} does not verify", label)));
    }
    Ok(ClassificationResult { label, raw_label: raw, basis_change: total, row, reductions })
}

fn step(c: Option<AppendixChange>, lambda: Option<&Rational>, from: &CatalogLabel, to: CatalogLabel) -> (BasisChange, ReductionStep) {
    let m = match c {
        Some(ch) => appendix_change(ch, lambda.unwrap_or(&one())).expect("λ is non-zero"),
        None => BasisChange::identity(6),
    };
    let s = ReductionStep { change: c, lambda: lambda.map(crate::scalar::fmt_rational), from: from.clone(), to: to.clone() };
    (m, s)
}

/// Bring parameters into the catalog ranges. Returns the label, the change
/// from the raw catalog basis to the normalized one, and the steps taken.
/// s10 has no reduction and is returned as is.
pub fn normalize_label(raw: &CatalogLabel) -> (CatalogLabel, BasisChange, Vec<ReductionStep>) {
    use AppendixChange::*;
    use CatalogLabel::*;
    let mut cur = raw.clone();
    let mut total = BasisChange::identity(6);
    let mut steps = Vec::new();
    let zero = Rational::zero();
    for _ in 0..16 {
        let next = match &cur {
            S5(a) if a.is_zero() => Some(step(Some(ChA), None, &cur, S4)),
            S5(a) if *a < zero => Some(step(Some(ChB), None, &cur, S5(-a.clone()))),
            S6(a, b) if *a < zero => Some(step(Some(ChC), None, &cur, S6(-a.clone(), b.clone()))),
            S6(a, b) if *b < zero => Some(step(Some(ChD), None, &cur, S6(a.clone(), -b.clone()))),
            S6(a, b) if a.is_zero() => Some(step(None, None, &cur, S7(b.clone()))),
            S6(a, b) if b.is_zero() => Some(step(Some(ChE), Some(a), &cur, S5(one() / a))),
            S6(a, b) if b.is_one() => Some(step(None, None, &cur, S8(a.clone()))),
            S6(a, b) if *b > one() => Some(step(Some(ChE), Some(b), &cur, S6(a / b, one() / b))),
            S7(a) if a.is_zero() => Some(step(Some(ChF), None, &cur, S2)),
            S7(a) if *a < zero => Some(step(Some(ChD), None, &cur, S7(-a.clone()))),
            S7(a) if *a > one() => Some(step(Some(ChE), Some(a), &cur, S7(one() / a))),
            S8(a) if a.is_zero() => Some(step(None, None, &cur, S7(one()))),
            S8(a) if *a < zero => Some(step(Some(ChC), None, &cur, S8(-a.clone()))),
            S11(a) if a.is_zero() => Some(step(Some(ChG), None, &cur, S9)),
            S11(a) if *a < zero => Some(step(Some(ChB), None, &cur, S11(-a.clone()))),
            S11(a) if a.is_one() => Some(step(Some(ChB), None, &cur, S12)),
            S11(a) if *a > one() => Some(step(Some(ChH), Some(a), &cur, S11(one() / a))),
            _ => None,
        };
        match next {
            Some((m, s)) => {
                cur = s.to.clone();
                total = total.then(&m);
                steps.push(s);
            }
            None => break,
        }
    }
    (cur, total, steps)
}

/// A deterministic set of splitting structures reaching every table row:
/// a rational grid for both ε, points on the Δ = 0 curve, and the KT family.
pub fn sample_params() -> Vec<SplittingParams> {
    let cq2 = |re: i64, im: i64, d: i64| G::new(q(re, d), q(im, d));
    let mut vals = Vec::new();
    for re in [q(-2, 1), qi(-1), q(-1, 2), qi(0), q(1, 2), qi(1), qi(2)] {
        for im in [q(-1, 2), qi(0), qi(1)] {
            vals.push(G::new(re.clone(), im));
        }
    }
    let mut out = vec![SplittingParams::kt(1)];
    for a in &vals {
        for b in &vals {
            for eps in [0u8, 1] {
                if eps == 0 && a.re.is_zero() && a.im.is_zero() && b.re.is_zero() && b.im.is_zero() {
                    continue;
                }
                out.push(SplittingParams::c2(a.clone(), b.clone(), eps));
            }
        }
    }
    for a in [cq2(1, 2, 1), cq2(-1, 3, 2), cq2(2, -1, 1)] {
        out.push(SplittingParams::c2(a.clone(), crate::scalar::Field::conj(&a), 1));
    }
    // Δ = 0 along (S + 1)² + D² = 1, S = ReA + ReB, D = ImA − ImB
    for t in [q(1, 3), q(1, 2), qi(2), q(-1, 2)] {
        let den = qi(1) + &t * &t;
        let s = qi(-1) + (qi(1) - &t * &t) / &den;
        let d = qi(2) * &t / &den;
        for ra in [qi(-1), q(-1, 2), qi(0), s.clone() / qi(2), s.clone() + qi(1)] {
            for ia in [qi(0), q(1, 2), d.clone() / qi(2), d.clone()] {
                let a = G::new(ra.clone(), ia.clone());
                let b = G::new(&s - &ra, &ia - &d);
                out.push(SplittingParams::c2(a, b, 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cq;

    fn g(re: i64, im: i64) -> G {
        G::from_ints(re, im)
    }

    #[test]
    fn invariants() {
        let a = cq(1, 2, 3);
        let inv = case_invariants(&a, &cj(&a));
        assert_eq!(inv.x, Some(Rational::zero()));
        assert_eq!(inv.y, Some(Rational::zero()));
        assert!(case_xy(&a, &a).is_err());
        assert!(case_invariants(&g(0, 1), &g(-1, 0)).delta.is_zero());
    }

    #[test]
    fn examples() {
        let r = classify(&SplittingParams::c2(g(-1, 0) - cq(-1, 0, 2), cq(-1, 0, 2), 0)).unwrap();
        assert_eq!(r.label, CatalogLabel::S9);
        let r = classify(&SplittingParams::c2(g(-1, 2), g(-1, 2), 1)).unwrap();
        assert_eq!(r.label, CatalogLabel::S5(qi(2)));
        let r = classify(&SplittingParams::c2(g(2, 0), g(3, 0), 1)).unwrap();
        assert_eq!(r.raw_label, CatalogLabel::S11(qi(7)));
        assert_eq!(r.label, CatalogLabel::S11(q(1, 7)));
        assert_eq!(classify(&SplittingParams::kt(1)).unwrap().label, CatalogLabel::S1);
        assert!(classify(&SplittingParams::kt(0)).is_err());
        assert!(classify(&SplittingParams::c2(g(0, 0), g(0, 0), 0)).is_err());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_label(&CatalogLabel::S7(qi(3))).0, CatalogLabel::S7(q(1, 3)));
        assert_eq!(normalize_label(&CatalogLabel::S11(qi(-1))).0, CatalogLabel::S12);
        let (l, m, steps) = normalize_label(&CatalogLabel::S5(q(1, 2)));
        assert_eq!(l, CatalogLabel::S5(q(1, 2)));
        assert!(steps.is_empty());
        assert_eq!(m, BasisChange::identity(6));
    }

    #[test]
    fn gauge_for_b_minus_conj_a() {
        for a in [g(3, 0), cq(1, 5, 2), g(0, -4)] {
            let r = classify(&SplittingParams::c2(a.clone(), -cj(&a), 0)).unwrap();
            assert_eq!(r.label, CatalogLabel::S2);
        }
    }
}

#[cfg(test)]
mod sweep {
    use super::*;

    #[test]
    fn every_row_fires_and_verifies() {
        let mut rows = std::collections::BTreeSet::new();
        for p in sample_params() {
            let r = classify(&p).unwrap_or_else(|e| panic!("{}: {}", p, e));
            rows.insert(r.row);
        }
        assert_eq!(rows.len(), 30, "{:?}", rows);
    }
}
