use proptest::prelude::*;

use super::*;
use crate::monomial::{Monomial, PrimaryComponent, Ring};
use crate::polyhedral::Constraint;
use crate::qlinalg::rat;

fn ideal(vars: &str, text: &str) -> MonomialIdeal {
    MonomialIdeal::parse(&Ring::parse(vars).unwrap(), text).unwrap()
}

fn i1() -> MonomialIdeal {
    ideal("x,y,z", "xy, xz, yz")
}

fn i2() -> MonomialIdeal {
    ideal("x,y,z", "xy, y^4z^4, x^4z^4")
}

fn i3() -> MonomialIdeal {
    ideal("x,y,z", "x^2y^2, x^4z^4, y^4z^4, xy^3z^2, x^3yz^2")
}

fn nine_facet_ideal() -> MonomialIdeal {
    ideal("x,y,z", "x^20, x^8y^2, x^14yz^10, x^2y^10, x^5y^6z^10, y^30, xy^20z^10")
}

/// Spread from the compact faces of the Newton polyhedron.
fn spread_by_polyhedron(i: &MonomialIdeal) -> usize {
    i.newton_polyhedron().unwrap().max_compact_face_dim().unwrap() + 1
}

#[test]
fn spreads_of_the_two_starter_ideals() {
    let r1 = analytic_spread(&i1()).unwrap();
    assert_eq!(r1.spread, 3);
    assert_eq!(r1.witness_face.dim, 2);
    assert!(r1.witness_functional.all_negative());
    let r2 = analytic_spread(&i2()).unwrap();
    assert_eq!(r2.spread, 2);
    assert_eq!(r2.witness_face.dim, 1);
    assert_eq!(spread_by_polyhedron(&i1()), 3);
    assert_eq!(spread_by_polyhedron(&i2()), 2);
}

#[test]
fn spread_of_the_two_primary_intersection() {
    let meet = ideal("x,y,z", "x^3, xy, y^2")
        .intersect(&ideal("x,y,z", "y^4, y^2z^2, z^3"))
        .unwrap();
    assert_eq!(analytic_spread(&meet).unwrap().spread, 3);
    assert_eq!(spread_by_polyhedron(&meet), 3);
    // The same value for the generator list with x y z^2 in place of x y z^3.
    let listed = ideal("x,y,z", "y^2z^2, y^4, xyz^2, x^3z^3");
    assert_eq!(analytic_spread(&listed).unwrap().spread, 3);
}

#[test]
fn principal_ideals_have_spread_one() {
    for text in ["x^2y", "xyz", "z^5"] {
        let r = analytic_spread(&ideal("x,y,z", text)).unwrap();
        assert_eq!(r.spread, 1);
        assert_eq!(r.bound, 1);
    }
    assert_eq!(analytic_spread(&MonomialIdeal::unit(Ring::parse("x,y").unwrap())).unwrap().spread, 1);
}

#[test]
fn zero_ideal_is_rejected() {
    let z = MonomialIdeal::zero(Ring::parse("x").unwrap());
    assert_eq!(analytic_spread(&z), Err(Error::ZeroIdeal));
    assert_eq!(spread_bound(&z), Err(Error::ZeroIdeal));
    assert_eq!(is_basic(&z), Err(Error::ZeroIdeal));
}

#[test]
fn bound_for_i2_uses_one_facet() {
    let b = spread_bound(&i2()).unwrap();
    assert_eq!((b.s, b.k, b.bound), (1, Some(1), 2));
    let cert = b.certificate.unwrap();
    assert_eq!(cert.combination, QVector::from_i64s(&[-1, -7, -1]));
    assert_eq!(cert.beta_support.len(), 1);
    // The facet used is u - v - w <= 0 written modulo the hyperplane.
    let facet = &b.np.inequalities[cert.beta_support[0]];
    let printed = Constraint::new(QVector::from_i64s(&[1, -1, -1]), rat(0));
    let canon = HRep::new(3, b.np.equalities.clone(), vec![printed]).unwrap().canonical();
    assert_eq!(facet, &canon.inequalities[0]);
}

#[test]
fn bound_for_i1_needs_no_facet() {
    let b = spread_bound(&i1()).unwrap();
    assert_eq!((b.s, b.k, b.bound), (1, Some(0), 3));
    let cert = b.certificate.unwrap();
    assert!(cert.beta_support.is_empty());
    assert!(cert.combination.iter().all(|x| *x <= rat(-1)));
}

#[test]
fn bound_for_the_nine_facet_ideal_needs_two_facets() {
    let i = nine_facet_ideal();
    let r = analytic_spread(&i).unwrap();
    assert_eq!((r.s, r.k, r.bound, r.spread, r.gap), (0, Some(2), 2, 2, 0));
    let b = spread_bound(&i).unwrap();
    // No single facet normal is negative in every coordinate.
    for c in &b.np.inequalities {
        assert!(!c.normal.all_negative());
    }
    // (-1,-6,0) + (0,0,-1) is negative everywhere.
    let w = QVector::from_i64s(&[-1, -6, 0]).add(&QVector::from_i64s(&[0, 0, -1]));
    assert!(w.all_negative());
}

#[test]
fn combinations_are_lexicographic() {
    let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
    assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    assert_eq!(Combinations::new(2, 3).count(), 0);
}

#[test]
fn two_generator_ideals_are_basic() {
    for m in 1..5u64 {
        let r = Ring::parse("x,y").unwrap();
        let i = MonomialIdeal::from_u64s(r, &[&[m, 0], &[0, m]]).unwrap();
        let b = is_basic(&i).unwrap();
        assert!(b.basic);
        assert_eq!(b.mu, 2);
    }
}

#[test]
fn i1_is_basic_and_i2_is_not() {
    let b1 = is_basic(&i1()).unwrap();
    assert!(b1.basic && b1.classifier && b1.column_sign_verdict);
    assert_eq!(b1.single_hyperplane_sign, Some(true));
    assert_eq!(b1.rref_matrix.rows(), &[QVector::from_i64s(&[1, 1, 1])]);

    let b2 = is_basic(&i2()).unwrap();
    assert!(!b2.basic);
    assert_eq!((b2.mu, b2.spread), (3, 2));
    assert_eq!(b2.single_hyperplane_sign, Some(false));
    assert!(!b2.conditions.positive_in_every_column);
}

#[test]
fn column_signs_alone_do_not_decide_basicness() {
    // Two hyperplanes whose reduced rows are (1,0,-1,1) and (0,1,1,-1):
    // every column has a positive entry, yet no combination is negative.
    let i = ideal("x,y,z,w", "xy, x^2z, y^2w");
    let b = is_basic(&i).unwrap();
    assert_eq!(
        b.rref_matrix.rows(),
        &[QVector::from_i64s(&[1, 0, -1, 1]), QVector::from_i64s(&[0, 1, 1, -1])]
    );
    assert!(b.conditions.mu_at_most_n && b.conditions.hyperplane_count);
    assert!(b.conditions.positive_in_every_column);
    assert!(!b.conditions.negative_combination);
    assert!(b.column_sign_verdict);
    assert!(!b.basic && !b.classifier);
    assert_eq!(b.spread, 2);
    assert_eq!(spread_by_polyhedron(&i), 2);
}

#[test]
fn reduction_of_the_square_of_the_maximal_ideal() {
    let j = ideal("x,y", "x^2, y^2");
    let i = ideal("x,y", "x, y").power(2).unwrap();
    let r = check_reduction(&j, &i, DEFAULT_MAX_POWER).unwrap();
    assert!(r.is_reduction);
    assert_eq!(r.method, ReductionMethod::PowerWitness);
    assert_eq!(r.witness_power, Some(1));
    let same = check_reduction(&i, &i, DEFAULT_MAX_POWER).unwrap();
    assert_eq!(same.witness_power, Some(1));
}

#[test]
fn non_reductions_and_bad_inputs() {
    let i = ideal("x,y", "x, y");
    let r = check_reduction(&ideal("x,y", "x^2"), &i, DEFAULT_MAX_POWER).unwrap();
    assert!(!r.is_reduction);
    assert_eq!(r.method, ReductionMethod::NpEquality);
    assert_eq!(r.witness_power, None);
    assert!(matches!(
        check_reduction(&ideal("x,y", "x, y"), &ideal("x,y", "x^2, y"), DEFAULT_MAX_POWER),
        Err(Error::NotContained(_))
    ));
    assert_eq!(
        check_reduction(&ideal("x,z", "x"), &i, DEFAULT_MAX_POWER),
        Err(Error::RingMismatch)
    );
}

#[test]
fn vertex_ideal_of_i3() {
    let j3 = minimal_monomial_reduction(&i3()).unwrap();
    assert_eq!(j3, ideal("x,y,z", "x^2y^2, x^4z^4, y^4z^4"));
    // The two dropped generators are midpoints of edges.
    assert!(!j3.contains(&Monomial::from_u64s(&[1, 3, 2])));
    let r = check_reduction(&j3, &i3(), DEFAULT_MAX_POWER).unwrap();
    assert!(r.is_reduction);
    // The generator list with x^4y^4 instead of x^4z^4 is not a reduction.
    let printed = ideal("x,y,z", "x^2y^2, x^4y^4, y^4z^4");
    assert!(!check_reduction(&printed, &i3(), DEFAULT_MAX_POWER).unwrap().is_reduction);
}

#[test]
fn minimal_monomial_reductions() {
    let sq = ideal("x,y", "x, y").power(2).unwrap();
    assert_eq!(minimal_monomial_reduction(&sq).unwrap(), ideal("x,y", "x^2, y^2"));
    assert_eq!(minimal_monomial_reduction(&i2()).unwrap(), i2());
}

fn component(vars: &str, text: &str) -> PrimaryComponent {
    PrimaryComponent::parse(&Ring::parse(vars).unwrap(), text).unwrap()
}

#[test]
fn disjoint_primary_examples() {
    let cs = [component("x,y,z", "x,y: x^2, xy, y^2"), component("x,y,z", "z: z^3")];
    let r = spread_disjoint_primary(&cs, true).unwrap();
    assert_eq!(r, FamilyReport { spread: 2, computed: Some(2) });

    let one = [component("x,y,z", "x,y,z: x^2, y^3, z, xy")];
    assert_eq!(spread_disjoint_primary(&one, true).unwrap().spread, 3);

    // Pure powers raised to powers, in five variables split into three primes.
    let vars = "a,b,c,d,e";
    let ring = Ring::parse(vars).unwrap();
    let q = |t: &str, m: u64| MonomialIdeal::parse(&ring, t).unwrap().power(m).unwrap();
    let cs = [
        PrimaryComponent::new(q("a^2, b^3", 2), vec![0, 1]).unwrap(),
        PrimaryComponent::new(q("c^5", 3), vec![2]).unwrap(),
        PrimaryComponent::new(q("d, e^4", 1), vec![3, 4]).unwrap(),
    ];
    assert_eq!(spread_disjoint_primary(&cs, true).unwrap().computed, Some(3));
}

#[test]
fn disjoint_primary_hypotheses_are_checked() {
    let overlap = [component("x,y,z", "x,y: x, y"), component("x,y,z", "y,z: y, z")];
    assert!(matches!(spread_disjoint_primary(&overlap, false), Err(Error::Hypothesis(m)) if m.contains('y')));
    let uncovered = [component("x,y,z", "x,y: x, y")];
    assert!(matches!(spread_disjoint_primary(&uncovered, false), Err(Error::Hypothesis(m)) if m.contains('z')));
    assert!(matches!(spread_disjoint_primary(&[], false), Err(Error::Hypothesis(_))));
}

#[test]
fn two_prime_power_examples() {
    assert_eq!(two_prime_powers_ideal(1, 1, 1, 1, 1).unwrap().to_string(), "x1*z1, y1");
    assert_eq!(
        spread_two_prime_powers(1, 1, 1, 1, 1, true).unwrap(),
        FamilyReport { spread: 2, computed: Some(2) }
    );
    assert_eq!(spread_two_prime_powers(1, 1, 1, 2, 1, true).unwrap().computed, Some(2));
    assert!(matches!(spread_two_prime_powers(0, 1, 1, 1, 1, true), Err(Error::Hypothesis(_))));
    assert!(matches!(spread_two_prime_powers(1, 1, 0, 1, 1, true), Err(Error::Hypothesis(_))));
    assert_eq!(spread_two_prime_powers(1, 1, 1, 0, 1, true), Err(Error::InvalidPower(0)));
}

fn arb_ideal(n: usize, max_gens: usize, max_exp: u64) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(proptest::collection::vec(0..=max_exp, n), 1..=max_gens)
        .prop_filter("proper ideal", |gs| gs.iter().all(|g| g.iter().any(|&e| e > 0)))
        .prop_map(move |gs| {
            let r = Ring::new((0..n).map(|i| format!("x{i}"))).unwrap();
            MonomialIdeal::new(r, gs.iter().map(|g| Monomial::from_u64s(g)).collect()).unwrap()
        })
}

/// A primary ideal on `vars` of an `n`-variable ring: pure powers plus
/// extra monomials supported on `vars`.
fn primary_on(n: usize, vars: Vec<usize>) -> impl Strategy<Value = MonomialIdeal> {
    let k = vars.len();
    (
        proptest::collection::vec(1u64..5, k),
        proptest::collection::vec(proptest::collection::vec(0u64..4, k), 0..4),
    )
        .prop_map(move |(pure, extra)| {
            let r = Ring::new((0..n).map(|i| format!("x{i}"))).unwrap();
            let lift = |e: &[u64]| {
                let mut full = vec![0u64; n];
                for (&v, &x) in vars.iter().zip(e) {
                    full[v] = x;
                }
                Monomial::from_u64s(&full)
            };
            let mut gens: Vec<Monomial> = (0..k)
                .map(|i| {
                    let mut e = vec![0u64; k];
                    e[i] = pure[i];
                    lift(&e)
                })
                .collect();
            gens.extend(extra.iter().filter(|e| e.iter().any(|&x| x > 0)).map(|e| lift(e)));
            MonomialIdeal::new(r, gens).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bound_is_attained_in_three_variables(i in arb_ideal(3, 6, 6)) {
        let r = analytic_spread(&i).unwrap();
        prop_assert_eq!(r.spread, r.bound);
        prop_assert_eq!(r.spread, spread_by_polyhedron(&i));
    }

    #[test]
    fn bound_is_sound_in_four_variables(i in arb_ideal(4, 6, 4)) {
        let r = analytic_spread(&i).unwrap();
        prop_assert!(r.certificate.is_some());
        prop_assert!(r.spread <= r.bound);
        prop_assert!(r.spread >= 1 && r.spread <= 4);
        prop_assert_eq!(r.spread, spread_by_polyhedron(&i));
        prop_assert_eq!(r.spread - 1, usize::try_from(r.witness_face.dim).unwrap());
    }

    #[test]
    fn certificate_is_a_valid_combination(i in arb_ideal(4, 6, 4)) {
        let b = spread_bound(&i).unwrap();
        let cert = b.certificate.unwrap();
        let mut w = QVector::zeros(4);
        for (a, c) in cert.alphas.iter().zip(&b.np.equalities) {
            w = w.add_scaled(a, &c.normal);
        }
        for (beta, c) in cert.betas.iter().zip(&b.np.inequalities) {
            prop_assert!(*beta >= rat(0));
            w = w.add_scaled(beta, &c.normal);
        }
        prop_assert_eq!(&w, &cert.combination);
        prop_assert!(w.all_negative());
        prop_assert_eq!(Some(cert.beta_support.len()), b.k);
        for (j, beta) in cert.betas.iter().enumerate() {
            prop_assert_eq!(cert.beta_support.contains(&j), *beta >= rat(1));
        }
    }

    #[test]
    fn spread_is_unchanged_by_extra_variables(i in arb_ideal(3, 5, 4), extra in 1usize..3) {
        let names: Vec<String> = (0..extra).map(|k| format!("y{k}")).collect();
        let e = i.embed(&names).unwrap();
        prop_assert_eq!(spread_value(&e).unwrap(), spread_value(&i).unwrap());
    }

    #[test]
    fn primary_ideal_spread_is_the_prime_size(
        (n, q) in (2usize..5).prop_flat_map(|n| {
            proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n)
                .prop_flat_map(move |vars| primary_on(n, vars).prop_map(move |q| (n, q)))
        })
    ) {
        let _ = n;
        prop_assert_eq!(spread_value(&q).unwrap(), q.radical().mu());
    }

    #[test]
    fn classifier_and_generator_count_agree(i in arb_ideal(4, 5, 3)) {
        let b = is_basic(&i).unwrap();
        prop_assert_eq!(b.basic, b.mu == b.spread);
        prop_assert_eq!(b.classifier, b.basic);
        if b.mu <= 2 {
            prop_assert!(b.basic);
        }
        if b.conditions.hyperplane_count && b.rref_matrix.nrows() == 1 {
            prop_assert_eq!(b.column_sign_verdict, b.basic);
        }
    }

    #[test]
    fn vertex_ideal_is_a_reduction(i in arb_ideal(3, 6, 5)) {
        let j = minimal_monomial_reduction(&i).unwrap();
        prop_assert!(check_reduction(&j, &i, 2).unwrap().is_reduction);
        prop_assert_eq!(j.mu(), i.newton_polyhedron().unwrap().vrep.vertices.len());
        // Dropping any vertex generator changes the Newton polyhedron.
        for g in j.generators() {
            let rest: Vec<Monomial> = j.generators().iter().filter(|h| *h != g).cloned().collect();
            if rest.is_empty() {
                continue;
            }
            let smaller = MonomialIdeal::new(i.ring().clone(), rest).unwrap();
            prop_assert!(!check_reduction(&smaller, &i, 1).unwrap().is_reduction);
        }
    }
}
