//! Ring-structure fuzz: elements built from generators known to pass the
//! membership test stay inside under sums and products, on gl(1|1),
//! gl(2|1) and q(2). The fibre-product recombination is exercised on the
//! same samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superchar::{
    compute_b_in, gl11_character, in_a, recombine_psi, AlgebraDesc, BaseForest, BaseKind, Lattice,
    RingElement, RootDatum, Sign, Weight, XiCoeff,
};

fn datum(s: &str) -> RootDatum {
    RootDatum::build(AlgebraDesc::parse(s).unwrap()).unwrap()
}

fn forest(d: &RootDatum) -> BaseForest {
    let b = superchar::default_base(d, BaseKind::Mixed).unwrap();
    BaseForest::new(d, &b).unwrap()
}

fn fuzz_closure(d: &RootDatum, generators: &[RingElement], rng: &mut ChaCha8Rng) {
    for _ in 0..60 {
        let mut x = RingElement::one(d);
        for _ in 0..rng.gen_range(1..=3) {
            let g = &generators[rng.gen_range(0..generators.len())];
            x = if rng.gen_bool(0.5) { &x * g } else { &x + g };
        }
        assert!(
            in_a(d, &x, Lattice::Full, false).unwrap(),
            "closure violated over {} by {x}",
            d.descriptor()
        );
        let back = recombine_psi(&x.psi(Sign::Plus), &x.psi(Sign::Minus)).unwrap();
        assert_eq!(back, x);
    }
}

#[test]
fn membership_closed_under_ring_operations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    let g11 = datum("gl(1|1)");
    let gens: Vec<RingElement> = [(1, 0), (0, 1), (2, -1), (-1, 3)]
        .iter()
        .map(|&(a, b)| gl11_character(&g11, &Weight::from_ints(&[a], &[b])).unwrap())
        .collect();
    fuzz_closure(&g11, &gens, &mut rng);

    let g21 = datum("gl(2|1)");
    let f21 = forest(&g21);
    let gens: Vec<RingElement> = [
        Weight::from_ints(&[0, 0], &[0]),
        Weight::from_ints(&[1, 0], &[0]),
        Weight::from_ints(&[1, 1], &[-1]),
        Weight::from_ints(&[2, 0], &[0]),
    ]
    .iter()
    .map(|lam| compute_b_in(&g21, &f21, lam).unwrap().element)
    .collect();
    fuzz_closure(&g21, &gens, &mut rng);

    let q2 = datum("q(2)");
    let f2 = forest(&q2);
    let gens: Vec<RingElement> = [
        Weight::from_ints(&[0, 0], &[]),
        Weight::from_ints(&[1, 0], &[]),
        Weight::from_ints(&[2, 1], &[]),
        Weight::from_ints(&[1, -1], &[]),
    ]
    .iter()
    .map(|lam| compute_b_in(&q2, &f2, lam).unwrap().element)
    .collect();
    fuzz_closure(&q2, &gens, &mut rng);
}

#[test]
fn xi_scaling_preserves_membership() {
    let q2 = datum("q(2)");
    let f2 = forest(&q2);
    let b = compute_b_in(&q2, &f2, &Weight::from_ints(&[2, 1], &[]))
        .unwrap()
        .element;
    let scaled = b.scale(XiCoeff::new(0, 1));
    assert!(in_a(&q2, &scaled, Lattice::Full, false).unwrap());
    // ξ b = b for these elements (sdim C vanishes off zero).
    assert_eq!(scaled, b);
}
