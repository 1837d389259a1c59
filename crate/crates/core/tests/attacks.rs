mod common;

use ncs_core::attacks::{conj_search, dlog_bruteforce, power_conj_search, tamper_suite, Component, PowerSearchOutcome, SearchBudget, SearchOutcome, Strategy};
use ncs_core::group::seeded_rng;
use ncs_core::matrix::{MatElement, MatGroup};
use ncs_core::pc::{catalog, d4_squared};
use ncs_core::protocols::ccs::{ccs_decrypt, ccs_encrypt, ccs_keys_from, CcsCiphertext, CcsParams, CcsSecret, Sha256Hash};
use ncs_core::protocols::ncs::{ncs_decrypt, ncs_keygen, ncs_encrypt, NcsCiphertext, Pairing};
use ncs_core::protocols::pcke::{pcke_encrypt, pcke_keygen};
use ncs_core::protocols::{Decrypted, PlatformSpec};
use ncs_core::{Group, GroupHandle, Word};
use num_bigint::BigUint;
use proptest::prelude::{prop_assert, prop_assert_eq, proptest, ProptestConfig};
use std::collections::HashSet;

/// Every word of exactly `len` letters over `gens` and their inverses, in
/// the order `g1 < g1⁻¹ < g2 < …`, paired with its value.
fn words_of_length<G: Group>(g: &G, gens: &[G::Elem], len: usize) -> Vec<(Word, G::Elem)> {
    let letters = 2 * gens.len();
    let total = letters.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let mut digits = vec![0; len];
            for d in digits.iter_mut().rev() {
                *d = code % letters;
                code /= letters;
            }
            let mut w = Word::empty();
            let mut val = g.identity();
            for d in digits {
                let (i, sign) = (d / 2, if d % 2 == 0 { 1 } else { -1 });
                w.push(i, sign);
                let x = if sign == 1 { gens[i].clone() } else { g.inv(&gens[i]).unwrap() };
                val = g.mul(&val, &x).unwrap();
            }
            (w, val)
        })
        .collect()
}

fn brute_conjugator<G: Group>(g: &G, b: &G::Elem, c: &G::Elem, gens: &[G::Elem], radius: usize) -> Option<Word> {
    (0..=radius).find_map(|len| {
        words_of_length(g, gens, len)
            .into_iter()
            .find(|(_, s)| g.conj(b, s).unwrap() == *c)
            .map(|(w, _)| w)
    })
}

fn ball<G: Group>(g: &G, gens: &[G::Elem], radius: usize) -> usize
where
    G::Elem: std::hash::Hash + Eq,
{
    (0..=radius)
        .flat_map(|len| words_of_length(g, gens, len).into_iter().map(|(_, v)| v))
        .collect::<HashSet<_>>()
        .len()
}

fn small_groups() -> Vec<GroupHandle> {
    vec![
        catalog("d4").unwrap().into(),
        catalog("q8").unwrap().into(),
        catalog("heis3").unwrap().into(),
        d4_squared().into(),
        MatGroup::anosov().into(),
    ]
}

fn element(g: &GroupHandle, raw: &[(usize, i32)]) -> ncs_core::Element {
    g.eval(&common::to_word(raw, g.gen_count())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_is_sound_complete_and_minimal(p in 0usize..5, b in common::raw_word(3), s in common::raw_word(2)) {
        let g = small_groups().swap_remove(p);
        let gens = g.generators();
        let b = element(&g, &b);
        let s = element(&g, &s);
        let c = g.conj(&b, &s).unwrap();
        let radius = 3;
        let outcome = conj_search(&g, &b, &c, &gens, &SearchBudget::new(radius, usize::MAX)).unwrap();
        let expected = brute_conjugator(&g, &b, &c, &gens, radius);
        match (&outcome, expected) {
            (SearchOutcome::Found { conjugator, word, .. }, Some(w)) => {
                prop_assert_eq!(&g.conj(&b, conjugator).unwrap(), &c);
                prop_assert_eq!(&ncs_core::group::eval_over(&g, &gens, word).unwrap(), conjugator);
                prop_assert_eq!(word.to_string(), w.to_string());
            }
            (SearchOutcome::NotFound { .. }, None) => {}
            (o, e) => prop_assert!(false, "search {} but brute force {:?}", o, e),
        }
    }

    #[test]
    fn larger_budgets_never_lose_a_conjugator(p in 0usize..5, b in common::raw_word(3), c in common::raw_word(3), r in 0usize..3) {
        let g = small_groups().swap_remove(p);
        let gens = g.generators();
        let (b, c) = (element(&g, &b), element(&g, &c));
        let small = conj_search(&g, &b, &c, &gens, &SearchBudget::new(r, usize::MAX)).unwrap();
        let large = conj_search(&g, &b, &c, &gens, &SearchBudget::new(r + 1, usize::MAX)).unwrap();
        if let SearchOutcome::Found { word, .. } = &small {
            match &large {
                SearchOutcome::Found { word: w2, .. } => prop_assert_eq!(w2, word),
                SearchOutcome::NotFound { .. } => prop_assert!(false, "lost at radius {}", r + 1),
            }
        } else {
            prop_assert!(small.states() <= large.states());
        }
    }
}

#[test]
fn exhausted_search_visits_the_whole_ball() {
    // a nontrivial b is never conjugate to the identity, so the search
    // explores all B(r) states
    for g in small_groups() {
        let gens = g.generators();
        let b = gens[0].clone();
        for r in 0..=3 {
            let out = conj_search(&g, &b, &g.identity(), &gens, &SearchBudget::new(r, usize::MAX)).unwrap();
            assert!(out.conjugator().is_none());
            assert_eq!(out.states(), ball(&g, &gens, r), "radius {r}");
        }
    }
    let m: GroupHandle = MatGroup::anosov().into();
    let out = conj_search(&m, &m.generators()[0], &m.identity(), &m.generators(), &SearchBudget::new(3, usize::MAX)).unwrap();
    assert_eq!(out.states(), 103);
}

#[test]
fn state_budget_stops_the_search() {
    let g = catalog("d4").unwrap();
    let gens = g.generators();
    let c = g.conj(&gens[0], &gens[1]).unwrap();
    let zero = conj_search(&g, &gens[0], &c, &gens, &SearchBudget::new(5, 0)).unwrap();
    assert_eq!(zero, SearchOutcome::NotFound { states: 0 });
    let one = conj_search(&g, &gens[0], &c, &gens, &SearchBudget::new(5, 1)).unwrap();
    assert_eq!(one, SearchOutcome::NotFound { states: 1 });
    let enough = conj_search(&g, &gens[0], &c, &gens, &SearchBudget::new(5, 100)).unwrap();
    assert_eq!(enough.to_string(), "found 1 g2");
}

#[test]
fn matrix_conjugator_beyond_radius_two() {
    let m = MatGroup::anosov();
    let gens = m.generators();
    let b = MatElement::new([1, 0], 0);
    let t3 = m.pow(&gens[2], 3).unwrap();
    let c = m.conj(&b, &t3).unwrap();
    // conjugating a translation by an element with t-exponent k applies M⁻ᵏ,
    // and M⁻³e₁ = (5, -8); so the conjugator needs t-exponent 3
    assert_eq!(c, MatElement::new([5, -8], 0));
    for len in 0..=2 {
        for (w, _) in words_of_length(&m, &gens, len) {
            let k: i64 = w
                .syllables()
                .iter()
                .filter(|s| s.gen == 2)
                .map(|s| i64::try_from(&s.exp).unwrap())
                .sum();
            assert!(k.abs() <= 2, "{w}");
        }
    }
    let near = conj_search(&m, &b, &c, &gens, &SearchBudget::new(2, usize::MAX)).unwrap();
    assert_eq!(near, SearchOutcome::NotFound { states: 33 });
    let far = conj_search(&m, &b, &c, &gens, &SearchBudget::new(3, usize::MAX)).unwrap();
    assert_eq!(far.to_string(), "found 3 g3^3");
}

#[test]
fn power_search_recovers_an_equivalent_pair() {
    let g: GroupHandle = catalog("d4").unwrap().into();
    let a = g.generators()[1].clone();
    let b = g.generators()[0].clone();
    let spec = PlatformSpec::new(g.clone())
        .with_secret(vec![b.clone()])
        .with_random(vec![b, g.pow(&a, 2).unwrap()])
        .with_word_length(7);
    let gens = g.generators();
    for seed in 0..20 {
        let mut rng = seeded_rng(seed);
        let keys = pcke_keygen(&spec, a.clone(), 3, &mut rng).unwrap();
        let (v, w) = (&keys.public.v, &keys.public.w);
        let (outcome, attempts) = power_conj_search(&g, v, w, &gens, &SearchBudget::new(4, 1000).with_max_power(4)).unwrap();
        match outcome {
            PowerSearchOutcome::Found { n, conjugator, .. } => {
                assert_eq!(attempts.len() as u64, n);
                assert_eq!(g.pow(w, n).unwrap(), g.conj(v, &conjugator).unwrap());
                assert!(n <= 3);
            }
            PowerSearchOutcome::NotFound { .. } => panic!("seed {seed}"),
        }
        let _ = pcke_encrypt(&spec, &keys.public, &g.identity(), 1, &mut rng).unwrap();
    }
    let same = power_conj_search(&g, &a, &a, &gens, &SearchBudget::new(4, 1000).with_max_power(4)).unwrap();
    assert_eq!(same.0.to_string(), "found n=1 0 1");
    let none = power_conj_search(&g, &a, &a, &gens, &SearchBudget::new(4, 1000).with_max_power(0)).unwrap();
    assert_eq!(none.0, PowerSearchOutcome::NotFound { states: 0 });
}

/// Swapped ciphertexts that pass verification for the desk key below, out
/// of 110; about 1 in 11 is expected.
const SWAP_COINCIDENCES: usize = 14;

fn alpha(ct: &CcsCiphertext) -> BigUint {
    use sha2::{Digest, Sha256};
    let digest = Sha256::digest(format!("{}\n{}\n{}\n", ct.u1, ct.u2, ct.e).as_bytes());
    BigUint::from_bytes_be(&digest) % 11u32
}

fn n(x: u32) -> BigUint {
    BigUint::from(x)
}

#[test]
fn dlog_recovers_every_exponent() {
    for (p, g, q) in [(23u32, 2u32, 11u32), (47, 2, 23), (59, 4, 29)] {
        for k in 0..q {
            let y = n(g).modpow(&n(k), &n(p));
            assert_eq!(dlog_bruteforce(&n(p), &n(g), &y, &n(q)), Some(n(k)));
        }
    }
}

#[test]
fn ccs_tampering_matches_the_verification_equation() {
    let params = CcsParams::desk();
    let keys = ccs_keys_from(
        &params,
        CcsSecret {
            x1: n(1),
            x2: n(2),
            y1: n(3),
            y2: n(4),
            z: n(5),
        },
    )
    .unwrap();
    let ct = ccs_encrypt(&params, &keys.public, &n(4), &n(7), &Sha256Hash).unwrap();
    let others: Vec<BigUint> = (1u32..23).map(n).filter(|x| *x != ct.v).collect();
    let mutants = tamper_suite(
        &ct,
        &[Strategy::Replace {
            component: Component::V,
            candidates: others.clone(),
        }],
    );
    assert_eq!(mutants.len(), 21);
    for m in &mutants {
        assert!(ccs_decrypt(&params, &keys.secret, &m.ciphertext, &Sha256Hash).is_reject(), "{}", m.label);
    }

    // swapping u₁ and u₂: at p = 23 the check value lives in a group of
    // order 11, so a swapped ciphertext passes by coincidence for some (m, r);
    // decryption must agree with the verification equation computed directly
    let subgroup: Vec<BigUint> = (1u32..23).map(n).filter(|x| x.modpow(&n(11), &n(23)) == n(1)).collect();
    let secret = &keys.secret;
    let mut coincidences = 0;
    for m in &subgroup {
        for r in 1u32..11 {
            let ct = ccs_encrypt(&params, &keys.public, m, &n(r), &Sha256Hash).unwrap();
            let swapped = tamper_suite(&ct, &[Strategy::Swap(Component::U1, Component::U2)]).remove(0).ciphertext;
            let a = alpha(&swapped);
            let p = n(23);
            let check = swapped.u1.modpow(&(&secret.x1 + &secret.y1 * &a), &p) * swapped.u2.modpow(&(&secret.x2 + &secret.y2 * &a), &p) % &p;
            let passes = check == swapped.v;
            assert_eq!(!ccs_decrypt(&params, secret, &swapped, &Sha256Hash).is_reject(), passes, "m={m} r={r}");
            coincidences += usize::from(passes);
        }
    }
    assert_eq!(coincidences, SWAP_COINCIDENCES);
    assert!(tamper_suite(&ct, &[]).is_empty());
}

#[test]
fn ncs_tamper_suite_over_d4xd4() {
    let g: GroupHandle = d4_squared().into();
    let gens = g.generators();
    let st = vec![gens[0].clone(), g.pow(&gens[1], 2).unwrap(), gens[3].clone()];
    let spec = PlatformSpec::new(g.clone())
        .with_secret(st.clone())
        .with_random(st)
        .with_factors(gens[..2].to_vec(), gens[2..].to_vec())
        .with_word_length(8);
    let mut rng = seeded_rng(9);
    let keys = ncs_keygen(&spec, Pairing::DirectProduct, &mut rng).unwrap();
    let m = g.mul(&gens[1], &gens[2]).unwrap();
    let ct = ncs_encrypt(&spec, &keys.public, &m, &mut rng).unwrap();
    let strategies = vec![
        Strategy::Replace {
            component: Component::V,
            candidates: gens.iter().map(|x| g.mul(&ct.v, x).unwrap()).collect(),
        },
        Strategy::Swap(Component::U1, Component::U2),
    ];
    let a = tamper_suite(&ct, &strategies);
    assert_eq!(a, tamper_suite(&ct, &strategies));
    assert_eq!(a.len(), 5);
    for mutant in &a[..4] {
        assert_eq!(ncs_decrypt(&g, &keys.secret, &mutant.ciphertext).unwrap(), Decrypted::Reject, "{}", mutant.label);
    }
    let NcsCiphertext { u1, u2, .. } = &a[4].ciphertext;
    assert_eq!((u1, u2), (&ct.u2, &ct.u1));
    let swapped: CcsCiphertext = tamper_suite(
        &CcsCiphertext {
            u1: n(1),
            u2: n(2),
            e: n(3),
            v: n(4),
        },
        &[Strategy::Swap(Component::E, Component::V)],
    )
    .remove(0)
    .ciphertext;
    assert_eq!((swapped.e, swapped.v), (n(4), n(3)));
}
