mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use schur_toeplitz::oracle::{adj_cofactor, det_laplace, ssyt_skew_schur, sym_bruteforce, SymKind};
use schur_toeplitz::partitions::{lr_special, minor_shapes, skew_pieri};
use schur_toeplitz::schur::{schur, schur_bialternant, skew_schur, skew_schur_dual};
use schur_toeplitz::symcore::{elem_from_roots, h_at_distinct_roots, h_from_e};
use schur_toeplitz::toeplitz::schur_sum_terms;
use schur_toeplitz::{
    AdjMethod, DenseMatrix, DetMethod, EigenRequest, HomSeq, IndexSet, LaurentSpec, MinorRequest,
    MinorVariant, Partition, Rational, RootList, Scalar, ScaledComplex, SkewPartition,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qq(n, d))
}

fn distinct_roots(max_w: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::btree_set((-12i64..=12, 1i64..=3), 1..=max_w).prop_filter_map("distinct", |set| {
        let mut v: Vec<Rational> = set.into_iter().map(|(n, d)| qq(n, d)).collect();
        v.sort();
        v.dedup();
        Some(v)
    })
}

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew_shape(max_part: usize, max_len: usize) -> impl Strategy<Value = SkewPartition> {
    (partition(max_part, max_len), partition(max_part, max_len)).prop_map(|(a, b)| SkewPartition::new(a, b))
}

// ---------------------------------------------------------------- symcore

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn e_and_h_are_reciprocal(z in proptest::collection::vec(rational(), 0..=8)) {
        let e = elem_from_roots(&RootList::new(z));
        let h = h_from_e(&e, 20).unwrap();
        for j in 0..=20i64 {
            let mut acc = Rational::zero();
            for k in 0..=j {
                acc = acc + Rational::sign(k) * e.get(k).unwrap() * h.get(j - k).unwrap();
            }
            prop_assert_eq!(acc, if j == 0 { q(1) } else { q(0) });
        }
        prop_assert_eq!(h.get(1).unwrap(), e.get(1).unwrap());
        let w = e.w().unwrap() as i64;
        for r in w + 1..w + 4 {
            prop_assert_eq!(e.get(r).unwrap(), q(0));
        }
    }

    #[test]
    fn closed_form_h_matches_recurrence(z in distinct_roots(6)) {
        let roots = RootList::new(z);
        let rec = h_from_e(&elem_from_roots(&roots), 30).unwrap();
        for r in 0..=30 {
            prop_assert_eq!(h_at_distinct_roots(r, &roots).unwrap(), rec.get(r).unwrap());
        }
    }

    #[test]
    fn sequences_match_enumeration(z in proptest::collection::vec(rational(), 0..=4)) {
        let roots = RootList::new(z);
        let e = elem_from_roots(&roots);
        let h = HomSeq::from_roots(&roots);
        for r in 0..=8 {
            prop_assert_eq!(sym_bruteforce(SymKind::Homogeneous, r, &roots).unwrap(), h.get(r).unwrap());
            prop_assert_eq!(sym_bruteforce(SymKind::Elementary, r, &roots).unwrap(), e.get(r).unwrap());
        }
    }
}

#[test]
fn homseq_cache_is_consistent_under_concurrency() {
    let roots = RootList::new(vec![qq(3, 2), q(-1), qq(1, 3), q(2), q(0), qq(-5, 2)]);
    let h = HomSeq::from_elem(elem_from_roots(&roots));
    let reference = HomSeq::from_elem(elem_from_roots(&roots)).range(0, 400).unwrap();
    let got: Vec<Vec<Rational>> = (0..16)
        .into_par_iter()
        .map(|t| {
            let top = 100 + 19 * t;
            (0..=top as i64).rev().map(|r| h.get(r).unwrap()).collect()
        })
        .collect();
    for v in got {
        for (k, x) in v.iter().rev().enumerate() {
            assert_eq!(*x, reference[k]);
        }
    }
}

// ------------------------------------------------------------- partitions

#[test]
fn conjugation_is_an_involution() {
    // every partition inside the 12 x 12 box
    let mut count = 0usize;
    let mut stack = vec![Vec::<usize>::new()];
    while let Some(cur) = stack.pop() {
        let lam = Partition::new(cur.clone()).unwrap();
        assert_eq!(lam.conjugate().conjugate(), lam);
        count += 1;
        if cur.len() < 12 {
            let cap = cur.last().copied().unwrap_or(12);
            for v in 1..=cap {
                let mut next = cur.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    // binomial(24, 12)
    assert_eq!(count, 2_704_156);
}

#[test]
fn containment_commutes_with_conjugation() {
    let all = partitions_in_box(4, 4);
    for mu in &all {
        for lam in &all {
            assert_eq!(mu.is_contained_in(lam), mu.conjugate().is_contained_in(&lam.conjugate()));
        }
    }
}

#[test]
fn complements_agree_and_parity_identity() {
    for n in 0..=12usize {
        for m in 0..=n {
            for s in IndexSet::all(n, m) {
                let c = s.complement();
                assert_eq!(c, s.complement_closed_form());
                assert_eq!(c.complement(), s);
                assert_eq!(c.len(), n - m);
                if n <= 10 {
                    assert_eq!(s.total() + c.total(), n * (n + 1) / 2);
                }
            }
        }
    }
    // the sign rule: |ρ|+|σ| and |ξ|+|η| have equal parity
    for n in 1..=6usize {
        for d in 0..=n {
            let sets = IndexSet::all(n, d);
            for xi in &sets {
                for eta in &sets {
                    let lhs = xi.complement().total() + eta.complement().total();
                    assert_eq!(lhs % 2, (xi.total() + eta.total()) % 2);
                }
            }
        }
    }
}

#[test]
fn minor_shapes_are_flips_of_each_other() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=5usize {
        for p in 0..=5usize {
            let z = RootList::new(random_distinct_roots(&mut rng, 3));
            let h = HomSeq::from_roots(&z);
            for d in 0..=n.min(5) {
                for xi in IndexSet::all(n, d) {
                    for eta in IndexSet::all(n, d) {
                        let (lm, ab) = minor_shapes(n, p, &xi, &eta).unwrap();
                        assert_eq!(lm.is_valid(), ab.is_valid());
                        if lm.is_valid() {
                            assert_eq!(canonical_cells(&ab), canonical_cells(&lm.flip()), "{lm} {ab}");
                        }
                        assert_eq!(skew_schur(&lm, &h).unwrap(), skew_schur(&ab, &h).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn special_lr_expansion_is_the_pieri_expansion() {
    for n in 1..=6usize {
        for p in 1..=3usize {
            for r in 1..=n {
                for s in 1..=n {
                    let mut lam = vec![n; p];
                    lam.push(s);
                    let pieri = skew_pieri(&Partition::new(lam).unwrap(), r);
                    assert_eq!(lr_special(n, p, r, s), pieri, "n={n} p={p} r={r} s={s}");
                }
            }
        }
    }
}

// ------------------------------------------------------------------ schur

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn flip_invariance(sp in skew_shape(6, 5), z in distinct_roots(5)) {
        let h = HomSeq::from_roots(&RootList::new(z));
        prop_assert_eq!(skew_schur(&sp, &h).unwrap(), skew_schur(&sp.flip(), &h).unwrap());
    }

    #[test]
    fn three_evaluators_agree(lam in partition(6, 5), z in distinct_roots(5)) {
        prop_assume!(lam.len() <= z.len());
        let roots = RootList::new(z);
        let h = HomSeq::from_roots(&roots);
        let e = elem_from_roots(&roots);
        let jt = schur(&lam, &h).unwrap();
        prop_assert_eq!(&jt, &skew_schur_dual(&SkewPartition::straight(lam.clone()), &e).unwrap());
        prop_assert_eq!(&jt, &schur_bialternant(&lam, &roots).unwrap());
    }

    #[test]
    fn jacobi_trudi_matches_tableaux(sp in skew_shape(4, 3), z in proptest::collection::vec(rational(), 1..=4)) {
        prop_assume!(sp.outer.weight() <= 8);
        let roots = RootList::new(z);
        let h = HomSeq::from_roots(&roots);
        prop_assert_eq!(skew_schur(&sp, &h).unwrap(), ssyt_skew_schur(&sp, &roots).unwrap());
        prop_assert_eq!(skew_schur_dual(&sp, &elem_from_roots(&roots)).unwrap(), skew_schur(&sp, &h).unwrap());
    }

    #[test]
    fn pieri_consistency(lam in partition(5, 4), r in 1usize..=5, z in distinct_roots(4)) {
        let h = HomSeq::from_roots(&RootList::new(z));
        let lhs = skew_schur(&SkewPartition::new(lam.clone(), Partition::new(vec![r]).unwrap()), &h).unwrap();
        let rhs = skew_pieri(&lam, r)
            .iter()
            .fold(q(0), |acc, nu| acc + schur(nu, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn repeated_roots_all_paths_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let w = rng.gen_range(2..=5);
        let mut z = random_roots(&mut rng, w);
        z[1] = z[0].clone();
        let roots = RootList::new(z);
        let lam = random_partition(&mut rng, 5, w);
        let h = HomSeq::from_roots(&roots);
        assert!(!h.uses_closed_form());
        assert_eq!(schur_bialternant(&lam, &roots).unwrap(), schur(&lam, &h).unwrap());
    }
}

// --------------------------------------------------------------- toeplitz

#[test]
fn minors_match_laplace_exhaustively() {
    let cases: Vec<(usize, usize)> = (1..=4).flat_map(|w| (0..=4).map(move |p| (w, p))).collect();
    cases.into_par_iter().for_each(|(w, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64((100 * w + p) as u64);
        let a = LaurentSpec::from_roots(p, random_nonzero(&mut rng), random_roots(&mut rng, w)).unwrap();
        for n in 1..=6 {
            let t = a.toeplitz_matrix(n).unwrap();
            for d in 0..=n {
                for xi in IndexSet::all(n, d) {
                    for eta in IndexSet::all(n, d) {
                        let req = MinorRequest::from_sets(xi.clone(), eta.clone()).unwrap();
                        let rows: Vec<usize> = req.kept_rows().entries().iter().map(|i| i - 1).collect();
                        let cols: Vec<usize> = req.kept_cols().entries().iter().map(|i| i - 1).collect();
                        let oracle = det_laplace(&t.select(&rows, &cols)).unwrap();
                        assert_eq!(a.minor(&req, MinorVariant::Expanded).unwrap(), oracle);
                        assert_eq!(a.minor(&req, MinorVariant::Flipped).unwrap(), oracle);
                    }
                }
            }
        }
    });
}

#[test]
fn adjugate_methods_match_cofactors() {
    let cases: Vec<(usize, usize)> = (1..=4).flat_map(|w| (1..=3).map(move |p| (w, p))).collect();
    cases.into_par_iter().for_each(|(w, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64((1000 + 10 * w + p) as u64);
        let a = LaurentSpec::from_roots(p, random_nonzero(&mut rng), random_roots(&mut rng, w)).unwrap();
        for n in 1..=7 {
            let oracle = adj_cofactor(&a.toeplitz_matrix(n).unwrap()).unwrap();
            for m in AdjMethod::ALL {
                assert_eq!(a.adjugate_matrix(n, m).unwrap(), oracle, "w={w} p={p} n={n} {}", m.name());
            }
            let first: Vec<Rational> = (0..n).map(|r| oracle.get(r, 0).clone()).collect();
            assert_eq!(a.adj_first_column(n).unwrap(), first);
        }
    });
}

#[test]
fn upper_triangular_adjugate_matches_cofactors() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for w in 1..=4 {
        let a = LaurentSpec::from_roots(0, random_nonzero(&mut rng), random_roots(&mut rng, w)).unwrap();
        for n in 1..=6 {
            let oracle = adj_cofactor(&a.toeplitz_matrix(n).unwrap()).unwrap();
            for m in [AdjMethod::Skew, AdjMethod::SkewFlipped, AdjMethod::Trench] {
                assert_eq!(a.adjugate_matrix(n, m).unwrap(), oracle);
            }
        }
    }
}

#[test]
fn summand_count_is_distance_to_border() {
    for n in 1..=9 {
        for p in 1..=3 {
            for r in 1..=n {
                for s in 1..=n {
                    let expect = r.min(s).min(n + 1 - r).min(n + 1 - s);
                    assert_eq!(schur_sum_terms(n, p, r, s).len(), expect);
                }
            }
        }
    }
}

#[test]
fn determinant_methods_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for w in 1..=4 {
        for p in 0..=4 {
            let a = LaurentSpec::from_roots(p, random_nonzero(&mut rng), random_roots(&mut rng, w)).unwrap();
            for n in 1..=8 {
                let dense = a.determinant(n, DetMethod::Dense).unwrap();
                for m in DetMethod::ALL {
                    assert_eq!(a.determinant(n, m).unwrap(), dense, "w={w} p={p} n={n} {}", m.name());
                }
            }
        }
    }
}

#[test]
fn series_mode_matches_root_mode() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for w in 1..=4 {
        for p in 1..=3 {
            let lead = random_nonzero(&mut rng);
            let z = random_distinct_roots(&mut rng, w);
            let by_roots = LaurentSpec::from_roots(p, lead.clone(), z.clone()).unwrap();
            let mut e = by_roots.elem().coeffs().to_vec();
            e.resize(w + 12, q(0));
            let series = LaurentSpec::from_series(p, lead, e).unwrap();
            for n in 1..=5 {
                assert_eq!(
                    series.determinant(n, DetMethod::Schur).unwrap(),
                    by_roots.determinant(n, DetMethod::Trench).unwrap()
                );
                for (r, s) in [(1, 1), (1, n), (n, 1), (n / 2 + 1, n)] {
                    assert_eq!(
                        series.adjugate_entry(n, r, s, AdjMethod::Trench).unwrap(),
                        by_roots.adjugate_entry(n, r, s, AdjMethod::Skew).unwrap()
                    );
                }
                let req = MinorRequest::new(n, vec![1], vec![n]).unwrap();
                assert_eq!(
                    series.minor(&req, MinorVariant::Expanded).unwrap(),
                    by_roots.minor(&req, MinorVariant::Flipped).unwrap()
                );
            }
            assert!(series.determinant(3, DetMethod::Trench).is_err());
        }
    }
}

#[test]
fn eigenvector_identity_holds_for_every_shift() {
    // T_n(a - x) v = (-1)^p a_p s_{(n^p)} e_1, eigenvalue or not
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for p in 1..=3 {
        for w in 1..=4 {
            let a = LaurentSpec::from_roots(p, random_nonzero(&mut rng), random_roots(&mut rng, w)).unwrap();
            for n in 1..=8 {
                let x = random_rational(&mut rng);
                let v = a.eigenvector(&EigenRequest::new(n, x.clone())).unwrap();
                let res = a.eigen_residual(n, &x, &v).unwrap();
                let shifted = a.shifted(&x).unwrap();
                let s = schur(&Partition::rectangle(n, p), shifted.h()).unwrap();
                let head = Rational::sign(p as i64) * shifted.lead().clone() * s;
                assert_eq!(res[0], head);
                assert!(res[1..].iter().all(|r| r.is_zero()));
            }
        }
    }
}

#[test]
fn geometric_form_reconstructs_eigenvector() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for p in 1..=3 {
        for w in p..=4 {
            for n in 1..=8 {
                let z = random_roots(&mut rng, w);
                let x = random_rational(&mut rng);
                let minus_x = LaurentSpec::from_roots(p, random_nonzero(&mut rng), z.clone()).unwrap();
                let a = minus_x.shifted(&(-x.clone())).unwrap();
                let req = EigenRequest::new(n, x).with_roots(z);
                let g = a.geometric_form(&req).unwrap();
                assert_eq!(g.v, a.eigenvector(&req).unwrap(), "p={p} w={w} n={n}");
            }
        }
    }
}

#[test]
fn geometric_coefficients_do_not_depend_on_r() {
    // C_j is computed once from D; check it against the explicit cofactor of B for every r
    let z = vec![q(2), q(-1), qq(1, 2), q(3)];
    let roots = RootList::new(z.clone());
    let (p, n) = (2usize, 5usize);
    let a = LaurentSpec::from_roots(p, q(1), z.clone()).unwrap();
    let g = a.shifted(&q(0)).unwrap().geometric_form(&EigenRequest::new(n, q(0)).with_roots(z)).unwrap();
    let vdm = schur_toeplitz::schur::vandermonde_det(&roots).unwrap();
    for r in 1..=n {
        let mut lam = vec![n - 1; p - 1];
        lam.push(n - r);
        let exps = schur_toeplitz::schur::bialternant_exponents(&Partition::new(lam).unwrap(), 4);
        let b = schur_toeplitz::schur::confluent_vandermonde(&exps, &roots);
        for j in 0..4 {
            let cof = Rational::sign((p - 1 + j) as i64) * b.strike(p - 1, j).det().unwrap();
            assert_eq!(cof / vdm.clone(), g.coefficients[j]);
        }
    }
}

#[test]
fn float_eigen_residual_is_small() {
    use nalgebra::DMatrix;
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for half in 1..=3usize {
        let w = 2 * half;
        // real symmetric symbol: a_{-k} = a_k
        let mut sym: Vec<f64> = (0..=half).map(|_| rng.gen_range(-1.0..1.0)).collect();
        sym[half] = 1.0;
        let coeffs: Vec<ScaledComplex> = (0..=w)
            .map(|i| ScaledComplex::from_f64(sym[half.abs_diff(i)]))
            .collect();
        let a = LaurentSpec::from_coefficients(half, coeffs).unwrap();
        for n in [3usize, 10, 25, 50] {
            let t = a.toeplitz_matrix(n).unwrap();
            let tf = DMatrix::from_fn(n, n, |i, j| t.get(i, j).to_complex().re);
            let eig = tf.clone().symmetric_eigen();
            let t_norm = (0..n).map(|i| tf.row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
            for &x in eig.eigenvalues.iter().step_by(n / 3 + 1) {
                let xs = ScaledComplex::from_f64(x);
                let v = a.eigenvector(&EigenRequest::new(n, xs)).unwrap();
                let res = a.eigen_residual(n, &xs, &v).unwrap();
                let v_norm = v.iter().map(Scalar::abs_f64).fold(0.0, f64::max);
                let r_norm = res.iter().map(Scalar::abs_f64).fold(0.0, f64::max);
                assert!(v_norm > 0.0);
                assert!(r_norm <= 1e-8 * t_norm * v_norm, "w={w} n={n} x={x}: {r_norm:e} vs {:e}", t_norm * v_norm);
            }
        }
    }
}

#[test]
fn skew_schur_round_trips_through_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..60 {
        let w = rng.gen_range(1..=4);
        let roots = RootList::new(random_roots(&mut rng, w));
        let lam = random_partition(&mut rng, 5, 4);
        let mu = random_partition(&mut rng, 5, 4);
        let sp = SkewPartition::new(lam, mu);
        let h = HomSeq::from_roots(&roots);
        assert_eq!(
            schur_toeplitz::toeplitz::skew_schur_as_minor(&sp, &roots).unwrap(),
            skew_schur(&sp, &h).unwrap(),
            "{sp}"
        );
    }
}

// ----------------------------------------------------------------- oracle

#[test]
fn tableau_oracle_matches_bialternant() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for w in 1..=3 {
        let roots = RootList::new(random_distinct_roots(&mut rng, w));
        for lam in partitions_up_to_weight(6, 6) {
            assert_eq!(ssyt_skew_schur(&SkewPartition::straight(lam.clone()), &roots).unwrap(), schur_bialternant(&lam, &roots).unwrap());
        }
    }
}

#[test]
fn cofactor_oracle_defining_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for n in 0..=5 {
        for _ in 0..6 {
            let m = DenseMatrix::from_fn(n, n, |_, _| random_rational(&mut rng));
            let adj = adj_cofactor(&m).unwrap();
            let det = det_laplace(&m).unwrap();
            let prod = m.mul(&adj).unwrap();
            assert_eq!(prod, DenseMatrix::from_fn(n, n, |i, j| if i == j { det.clone() } else { q(0) }));
            assert_eq!(det, m.det().unwrap());
        }
    }
}
