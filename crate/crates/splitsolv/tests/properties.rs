use num_traits::Signed;
use proptest::prelude::*;

use splitsolv::coframe::{splitting_coframe, CForm, Coframe, SplittingParams};
use splitsolv::double_complex::{DoubleComplex, Theory};
use splitsolv::metrics::{is_positive, HermitianMetric};
use splitsolv::nakamura::{build_complexes, NakamuraParams};
use splitsolv::{ExactMatrix, Field, GaussianRational as G, Rational};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn gauss() -> impl Strategy<Value = G> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(a, b, d)| G::new(rat(a, d), rat(b, d)))
}

fn params() -> impl Strategy<Value = SplittingParams> {
    prop_oneof![
        1 => Just(SplittingParams::kt(1)),
        8 => (gauss(), gauss(), 0u8..=1)
            .prop_filter("abelian", |(a, b, e)| *e == 1 || !(a.is_zero() && b.is_zero()))
            .prop_map(|(a, b, e)| SplittingParams::c2(a, b, e)),
    ]
}

fn form(gens: usize) -> impl Strategy<Value = CForm> {
    prop::collection::vec((0u32..(1 << gens), gauss()), 1..8).prop_map(|terms| {
        let mut f = CForm::zero();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    })
}

fn matrix() -> impl Strategy<Value = ExactMatrix<G>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![1 => Just(G::zero()), 2 => gauss()], r * c).prop_map(move |v| ExactMatrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

fn sylvester(m: &HermitianMetric) -> bool {
    let i = G::i();
    let mi = -i.clone();
    let re = |x: &Rational| G::real(x.clone());
    let h = ExactMatrix::from_rows(vec![
        vec![re(&m.r2), mi.clone() * m.u.clone(), mi.clone() * m.z.clone()],
        vec![i.clone() * m.u.conj(), re(&m.s2), mi * m.v.clone()],
        vec![i.clone() * m.z.conj(), i * m.v.conj(), re(&m.t2)],
    ]);
    (1..=3).all(|k| {
        let d = ExactMatrix::from_fn(k, k, |a, b| h[(a, b)].clone()).det();
        d.is_real() && d.re.is_positive()
    })
}

fn nakamura_c() -> impl Strategy<Value = G> {
    prop_oneof![(1i64..=5).prop_map(|k| G::new(rat(0, 1), rat(1, k))), (-3i64..=3, 1i64..=3, 1i64..=3).prop_map(|(a, b, d)| G::new(rat(a, d), rat(b, d))),]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn differentials_square_to_zero((p, f) in params().prop_flat_map(|p| (Just(p), form(6)))) {
        let cf: Coframe = splitting_coframe(&p);
        prop_assert!(cf.d(&cf.d(&f)).is_zero());
        let del = cf.del(&f).unwrap();
        let dbar = cf.delbar(&f).unwrap();
        prop_assert!(cf.del(&del).unwrap().is_zero());
        prop_assert!(cf.delbar(&dbar).unwrap().is_zero());
        prop_assert!(cf.del(&dbar).unwrap().add(&cf.delbar(&del).unwrap()).is_zero());
        prop_assert_eq!(cf.d(&f), del.add(&dbar));
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn positivity_is_sylvester(t2 in 1i64..=4, u in gauss(), v in gauss(), z in gauss()) {
        let m = HermitianMetric::normalized(rat(t2, 1), u, v, z);
        prop_assert_eq!(is_positive(&m), sylvester(&m));
    }

    #[test]
    fn invariant_complex_tables(p in params()) {
        let dc = DoubleComplex::from_coframe(&splitting_coframe(&p)).unwrap();
        let h = dc.cohomology(Theory::Dolbeault);
        let bc = dc.cohomology(Theory::BottChern);
        let a = dc.cohomology(Theory::Aeppli);
        let dr = dc.cohomology(Theory::DeRham);
        for i in 0..=3 {
            for j in 0..=3 {
                prop_assert_eq!(bc.get(i, j), bc.get(j, i));
                prop_assert_eq!(bc.get(i, j), a.get(3 - i, 3 - j));
            }
        }
        if dc.ddbar_lemma() {
            for k in 0..=6 {
                prop_assert_eq!(h.total(k), dr.betti(k));
                prop_assert_eq!(bc.total(k), dr.betti(k));
            }
        }
        if dc.lemma_b_sufficient() {
            prop_assert!(dc.ddbar_lemma());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn nakamura_duality(c in nakamura_c()) {
        let nc = build_complexes(&NakamuraParams::new(c, G::zero()).unwrap()).unwrap();
        let bc = nc.cohomology(Theory::BottChern);
        let a = nc.cohomology(Theory::Aeppli);
        let h = nc.cohomology(Theory::Dolbeault);
        for i in 0..=3 {
            for j in 0..=3 {
                prop_assert_eq!(bc.get(i, j), a.get(3 - i, 3 - j));
                prop_assert_eq!(bc.get(i, j), bc.get(j, i));
                prop_assert_eq!(h.get(i, j), h.get(3 - i, 3 - j));
            }
        }
        if nc.b.lemma_b_sufficient() {
            prop_assert!(nc.b.ddbar_lemma());
        }
        if nc.c.ddbar_lemma() {
            let dr = nc.cohomology(Theory::DeRham);
            for k in 0..=6 {
                prop_assert_eq!(h.total(k), dr.betti(k));
            }
        }
    }
}

#[test]
fn family_members_share_complexes() {
    // C_k = i/(2k+1) for k = -1, 0, 1
    for t in ["0", "1/2", "1/4+i/4"] {
        let t = G::parse(t).unwrap();
        let build = |c: &str| build_complexes(&NakamuraParams::new(G::parse(c).unwrap(), t.clone()).unwrap()).unwrap();
        let base = build("-i");
        for c in ["i", "i/3"] {
            let other = build(c);
            assert_eq!(base.b, other.b, "B differs for C = {c}, t = {t}");
            assert_eq!(base.c, other.c, "C differs for C = {c}, t = {t}");
        }
    }
}
