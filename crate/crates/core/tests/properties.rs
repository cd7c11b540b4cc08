use proptest::prelude::*;

use quotcheck::braid::{artin_action, braid_equal, BraidWord};
use quotcheck::catalog::{emit_catalog, parse_catalog, CatalogEntry};
use quotcheck::gf2::{
    is_symplectic, quadratic_refinements, symplectic_form, transvection, GF2Matrix, GF2Vector,
};
use quotcheck::group::{closure, named, GroupElement, Permutation, DEFAULT_CEILING};
use quotcheck::hom::standard_projection;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let k = (n - 1) as i16;
    prop::collection::vec((1..=k, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls.into_iter().map(|(i, neg)| if neg { -i } else { i }).collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn strands_and_words() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (3usize..=6).prop_flat_map(|n| (word(n, 12), word(n, 12)))
}

/// A product of transvections in Sp(2g, 𝔽₂).
fn symplectic(g: usize) -> impl Strategy<Value = GF2Matrix> {
    let top = (1u16 << (2 * g)) - 1;
    prop::collection::vec(1..=top, 0..10).prop_map(move |vs| {
        vs.into_iter().fold(GF2Matrix::identity(2 * g).unwrap(), |acc, v| {
            let t = transvection(&GF2Vector::new(2 * g, v as u8).unwrap()).unwrap();
            acc.mul(&t)
        })
    })
}

proptest! {
    #[test]
    fn permutation_products_associate(a in perm(6), b in perm(6), c in perm(6)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert_eq!(a.mul(&b).apply(1), b.apply(a.apply(1)));
        prop_assert_eq!(a.mul(&b).inv(), b.inv().mul(&a.inv()));
    }

    #[test]
    fn cycle_notation_round_trips(p in perm(7)) {
        prop_assert_eq!(Permutation::parse_cycles(7, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn closure_order_divides_symmetric_order(a in perm(5), b in perm(5)) {
        let h = closure(&[a, b], DEFAULT_CEILING).unwrap();
        prop_assert_eq!(120 % h.order(), 0);
        prop_assert!(h.is_closed());
        let again = closure(h.elements(), DEFAULT_CEILING).unwrap();
        prop_assert_eq!(again.order(), h.order());
    }

    #[test]
    fn artin_action_reverses_products((a, b) in strands_and_words()) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(artin_action(&ab), artin_action(&a).then(&artin_action(&b)));
        let trivial = ab.concat(&ab.inverse()).unwrap();
        prop_assert!(braid_equal(&trivial, &BraidWord::identity(ab.strands()).unwrap()).unwrap());
    }

    #[test]
    fn inserting_trivial_pairs_preserves_the_braid(
        (a, _) in strands_and_words(),
        pos in any::<prop::sample::Index>(),
        gen in any::<prop::sample::Index>(),
    ) {
        let n = a.strands();
        let padded = a
            .insert_trivial(pos.index(a.len() + 1), gen.index(n - 1) + 1)
            .unwrap();
        prop_assert!(braid_equal(&a, &padded).unwrap());
        let pi = standard_projection(n).unwrap();
        prop_assert_eq!(pi.evaluate(&a).unwrap(), pi.evaluate(&padded).unwrap());
    }

    #[test]
    fn equal_braids_have_equal_permutations((a, b) in strands_and_words()) {
        if braid_equal(&a, &b).unwrap() {
            let pi = standard_projection(a.strands()).unwrap();
            prop_assert_eq!(pi.evaluate(&a).unwrap(), pi.evaluate(&b).unwrap());
        }
    }

    #[test]
    fn transvection_products_are_symplectic(m in symplectic(3), u in 0u8..64, v in 0u8..64) {
        prop_assert!(is_symplectic(&m));
        let (u, v) = (GF2Vector::new(6, u).unwrap(), GF2Vector::new(6, v).unwrap());
        prop_assert_eq!(
            symplectic_form(&m.apply(&u), &m.apply(&v)).unwrap(),
            symplectic_form(&u, &v).unwrap()
        );
        let minv = m.try_inverse().unwrap();
        prop_assert!(m.mul(&minv).is_identity());
    }

    #[test]
    fn symplectic_action_preserves_arf(m in symplectic(2), a in 0usize..16) {
        let q = &quadratic_refinements(2).unwrap()[a];
        let moved = q.act(&m).unwrap();
        prop_assert!(moved.is_refinement());
        prop_assert_eq!(moved.arf(), q.arf());
    }

    #[test]
    fn catalog_emit_parse_round_trips(gens in prop::collection::vec(perm(5), 0..4), name in "[A-Za-z][A-Za-z0-9_]{0,8}") {
        let entry = CatalogEntry { name, degree: 5, generators: gens };
        let text = emit_catalog(std::slice::from_ref(&entry));
        let parsed = parse_catalog(&text).unwrap();
        prop_assert_eq!(&parsed[0], &entry);
        prop_assert_eq!(emit_catalog(&parsed), text);
    }
}

#[test]
fn named_groups_agree_with_catalog_closures() {
    let text = "{\"name\":\"A5\",\"degree\":5,\"generators\":[\"(1 2 3)\",\"(3 4 5)\"]}";
    let entry = &parse_catalog(text).unwrap()[0];
    let mut from_catalog = entry.to_table(DEFAULT_CEILING).unwrap().elements().to_vec();
    let mut builtin = named::alternating(5).unwrap().elements().to_vec();
    from_catalog.sort();
    builtin.sort();
    assert_eq!(from_catalog, builtin);
}
