use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stallings::sample::{random_generators, random_word};
use stallings::{pullback, Alphabet, Edge, StallingsGraph, Word};

fn gens_strategy() -> impl Strategy<Value = (Alphabet, Vec<Word>)> {
    (any::<u64>(), 2usize..=3).prop_map(|(seed, rank)| {
        let alpha = Alphabet::new(&"abc"[..rank]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_generators(&mut rng, &alpha, 1..=5, 9);
        (alpha, gens)
    })
}

/// The same graph with shuffled edges and relabeled vertices.
fn scramble(g: &StallingsGraph, rng: &mut ChaCha8Rng) -> StallingsGraph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| Edge::new(perm[e.source], e.label, perm[e.target]))
        .collect();
    edges.shuffle(rng);
    StallingsGraph::from_parts(g.alphabet(), g.vertex_count(), perm[g.base()], edges).unwrap()
}

proptest! {
    #[test]
    fn fold_is_confluent_and_idempotent((alpha, gens) in gens_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bq = StallingsGraph::bouquet(&gens, &alpha).unwrap();
        let reference = bq.fold().canonical_form();
        for _ in 0..3 {
            prop_assert_eq!(scramble(&bq, &mut rng).fold().canonical_form(), reference.clone());
        }
        let f = bq.fold();
        prop_assert_eq!(f.fold(), f.clone());
        prop_assert_eq!(f.fold().canonical_form(), f.canonical_form());
    }

    #[test]
    fn generators_are_members((alpha, gens) in gens_strategy()) {
        let g = StallingsGraph::subgroup(&gens, &alpha).unwrap();
        for w in &gens {
            prop_assert!(g.contains(w).unwrap());
            prop_assert!(g.contains(&w.inverse()).unwrap());
        }
        prop_assert!(g.rank() <= gens.iter().filter(|w| !w.is_identity()).count());
    }

    #[test]
    fn trimming_preserves_rank_and_membership((alpha, gens) in gens_strategy(), seed in any::<u64>()) {
        let folded = StallingsGraph::bouquet(&gens, &alpha).unwrap().fold();
        let trimmed = folded.core_trim();
        prop_assert_eq!(folded.edge_count() + 1 - folded.vertex_count(),
                        trimmed.edge_count() + 1 - trimmed.vertex_count());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..50 {
            let w = random_word(&mut rng, &alpha, 10);
            prop_assert_eq!(folded.contains(&w).unwrap(), trimmed.contains(&w).unwrap());
        }
    }

    #[test]
    fn basis_round_trip_and_products((alpha, gens) in gens_strategy(), seed in any::<u64>()) {
        let g = StallingsGraph::subgroup(&gens, &alpha).unwrap();
        let basis = g.basis();
        prop_assert_eq!(basis.len(), g.rank());
        let back = StallingsGraph::subgroup(&basis, &alpha).unwrap();
        prop_assert_eq!(back.canonical_form(), g.canonical_form());
        if basis.is_empty() {
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..30 {
            let mut w = Word::identity(&alpha);
            for _ in 0..3 {
                let b = basis.choose(&mut rng).unwrap();
                let b = if rand::Rng::gen(&mut rng) { b.clone() } else { b.inverse() };
                w = w.concat(&b).unwrap();
                prop_assert!(g.contains(&w).unwrap());
            }
        }
    }

    #[test]
    fn subgroup_is_deterministic((alpha, gens) in gens_strategy()) {
        let a = StallingsGraph::subgroup(&gens, &alpha).unwrap();
        let b = StallingsGraph::subgroup(&gens, &alpha).unwrap();
        prop_assert_eq!(a.clone(), b);
        prop_assert_eq!(a.canonical_form(), a.canonical_form().canonical_form());
    }

    #[test]
    fn pullback_with_itself_is_diagonal((alpha, gens) in gens_strategy()) {
        let g = StallingsGraph::subgroup(&gens, &alpha).unwrap();
        let p = pullback(&g, &g).unwrap().core_trim();
        prop_assert_eq!(p.canonical_form(), g.canonical_form());
    }
}

/// With ℓ = 0 the intersection graph is the (m−1)-graph with ℓ = n−1 plus
/// hanging trees, so the trimmed cores coincide.
#[test]
fn zero_l_intersection_trims_to_smaller_family() {
    use stallings::{family_h, family_k, FamilySpec};
    let alpha = Alphabet::free_ab();
    for m in 3..=6 {
        for n in 2..=5 {
            let kg = StallingsGraph::subgroup(&family_k(n).unwrap(), &alpha).unwrap();
            let core = |spec: FamilySpec| {
                let h = StallingsGraph::subgroup(&family_h(&spec), &alpha).unwrap();
                pullback(&h, &kg).unwrap()
            };
            let big = core(FamilySpec::new(m, n, m - 2, 0).unwrap());
            let small = core(FamilySpec::new(m - 1, n, m - 3, n - 1).unwrap());
            assert!(big.vertex_count() > big.core_trim().vertex_count(), "m={m} n={n}");
            assert_eq!(
                big.core_trim().canonical_form(),
                small.core_trim().canonical_form(),
                "m={m} n={n}"
            );
        }
    }
}
