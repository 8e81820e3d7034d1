//! Lattices in G5^α: exp(τ ad_{e5}) conjugated to an integer matrix over ℚ(√D).

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{qi, Field, QuadraticScalar, Rational};

type Q = QuadraticScalar;
type QM = ExactMatrix<Q>;

fn sign(s: i64) -> i64 {
    if s % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check(s: i64, n: i64) -> Result<()> {
    if s == 0 {
        return Err(Error::OutOfRange("s must be nonzero".into()));
    }
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n}: need n >= 3")));
    }
    Ok(())
}

/// D = n² − 4(−1)^s.
pub fn discriminant(s: i64, n: i64) -> Result<u64> {
    check(s, n)?;
    Ok((n * n - 4 * sign(s)) as u64)
}

/// e^{−τ} = (n + √D)/2.
pub fn exp_minus_tau(s: i64, n: i64) -> Result<Q> {
    let d = discriminant(s, n)?;
    Q::new(d, Rational::new(n.into(), 2.into()), Rational::new(1.into(), 2.into()))
}

/// exp(τ_{s,n} ad_{e5}) = diag(e^{−τ}, e^{−τ}, (−1)^s e^τ, (−1)^s e^τ), since cos ατ = (−1)^s and sin ατ = 0.
pub fn exp_ad_at_tau(s: i64, n: i64) -> Result<QM> {
    let x = exp_minus_tau(s, n)?;
    let y = Q::from_i64(sign(s)) * x.inv();
    Ok(QM::diag(vec![x.clone(), x, y.clone(), y]))
}

pub fn b_matrix(s: i64, n: i64) -> Result<ExactMatrix<Rational>> {
    check(s, n)?;
    let e = qi(-sign(s));
    let (z, o, m) = (qi(0), qi(1), qi(n));
    Ok(ExactMatrix::from_rows(vec![
        vec![z.clone(), e.clone(), z.clone(), z.clone()],
        vec![o.clone(), m.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), e],
        vec![z.clone(), z, o, m],
    ]))
}

/// β± = (−n ± √D)/2.
pub fn betas(s: i64, n: i64) -> Result<(Q, Q)> {
    let d = discriminant(s, n)?;
    let h = Rational::new(1.into(), 2.into());
    let a = Rational::new((-n).into(), 2.into());
    Ok((Q::new(d, a.clone(), h.clone())?, Q::new(d, a, -h)?))
}

pub fn q_matrix(s: i64, n: i64) -> Result<QM> {
    let (bp, bm) = betas(s, n)?;
    let (z, o) = (Q::zero(), Q::one());
    Ok(QM::from_rows(vec![
        vec![z.clone(), bp.clone(), z.clone(), bm.clone()],
        vec![z.clone(), o.clone(), z.clone(), o.clone()],
        vec![bp, z.clone(), bm, z.clone()],
        vec![o.clone(), z.clone(), o, z],
    ]))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeCertificate {
    pub s: i64,
    pub n: i64,
    #[serde(rename = "D")]
    pub d: u64,
    /// τ_{s,n} and α_{s,n} as their defining expressions.
    pub tau: String,
    pub alpha: String,
    #[serde(rename = "M")]
    pub m: QM,
    #[serde(rename = "Bs")]
    pub bs: ExactMatrix<Rational>,
    #[serde(rename = "Q")]
    pub q: QM,
    /// Coefficients of charpoly(M), lowest degree first.
    pub charpoly: Vec<String>,
    pub det_bs: String,
}

fn to_integers(c: &[Q]) -> Result<Vec<BigInt>> {
    c.iter()
        .map(|x| {
            if !num_traits::Zero::is_zero(&x.b) || !x.a.is_integer() {
                return Err(Error::Internal(format!("charpoly coefficient {x} is not an integer")));
            }
            Ok(x.a.to_integer())
        })
        .collect()
}

pub fn certificate(s: i64, n: i64) -> Result<LatticeCertificate> {
    let d = discriminant(s, n)?;
    let m = exp_ad_at_tau(s, n)?;
    let bs = b_matrix(s, n)?;
    let q = q_matrix(s, n)?;
    let qinv = q.inverse()?;
    let lifted = bs.map_to(|x| Q::from_rational(x.clone()));
    if q.mul(&m).mul(&qinv) != lifted {
        return Err(Error::Internal(format!("Q M Q^-1 != B_s for s = {s}, n = {n}")));
    }
    let cp = to_integers(&m.charpoly())?;
    let sg = BigInt::from(sign(s));
    let nn = BigInt::from(n);
    // (λ² − nλ + (−1)^s)²
    let expect = vec![sg.clone() * &sg, -BigInt::from(2) * &nn * &sg, &nn * &nn + BigInt::from(2) * &sg, -BigInt::from(2) * &nn, BigInt::from(1)];
    if cp != expect {
        return Err(Error::Internal(format!("charpoly of M is {cp:?}")));
    }
    let det = bs.det();
    if det.abs() != qi(1) {
        return Err(Error::Internal(format!("det B_s = {det}")));
    }
    let x = format!("(({n}+sqrt({d}))/2)");
    Ok(LatticeCertificate {
        s,
        n,
        d,
        tau: format!("-log{x}"),
        alpha: format!("-{s}*pi/log{x}"),
        m,
        bs,
        q,
        charpoly: cp.iter().map(|c| c.to_string()).collect(),
        det_bs: det.to_string(),
    })
}
