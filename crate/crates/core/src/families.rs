//! Explicit subgroup families of `F(a, b)` whose intersections realise every
//! rank between 0 and `(m−1)(n−1)+1`, and sweeps that check them.
//!
//! For `m, n ≥ 2`, `0 ≤ k ≤ m−2` and `0 ≤ ℓ ≤ n−1`:
//!
//! ```text
//! H(m,n,k,ℓ) = ⟨ bⁱ a b⁻ⁱ (0 ≤ i ≤ k),  b^(k+1) a^(n−ℓ) b^−(k+1),  bⁱ aⁿ b⁻ⁱ (k+2 ≤ i ≤ m−1) ⟩
//! K(n)       = ⟨ aⁱ b a⁻ⁱ (0 ≤ i ≤ n−1) ⟩
//! ```
//!
//! and `rank(H ∩ K) = k(n−1) + ℓ`.

use std::fmt::Write as _;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::StallingsGraph;
use crate::pullback::intersection_rank;
use crate::sample::random_generators;
use crate::word::{Alphabet, Word};

const A: usize = 0;
const B: usize = 1;

/// Parameters `(m, n, k, ℓ)` of an `H` family member.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    m: usize,
    n: usize,
    k: usize,
    l: usize,
}

impl FamilySpec {
    pub fn new(m: usize, n: usize, k: usize, l: usize) -> Result<Self> {
        if m < 2 || n < 2 || k > m - 2 || l > n - 1 {
            return Err(Error::InvalidFamily {
                m: m as i64,
                n: n as i64,
                k: k as i64,
                l: l as i64,
            });
        }
        Ok(Self { m, n, k, l })
    }

    /// Like [`FamilySpec::new`] but accepting possibly negative input.
    pub fn from_signed(m: i64, n: i64, k: i64, l: i64) -> Result<Self> {
        let invalid = Error::InvalidFamily { m, n, k, l };
        let conv = |x: i64| usize::try_from(x).map_err(|_| invalid.clone());
        Self::new(conv(m)?, conv(n)?, conv(k)?, conv(l)?)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Every valid spec with `m ≤ m_max`, `n ≤ n_max`, in lexicographic order.
    pub fn enumerate(m_max: usize, n_max: usize) -> impl Iterator<Item = FamilySpec> {
        (2..=m_max).flat_map(move |m| {
            (2..=n_max).flat_map(move |n| {
                (0..=m - 2).flat_map(move |k| (0..n).map(move |l| FamilySpec { m, n, k, l }))
            })
        })
    }
}

fn power(letter: usize, e: i64) -> Word {
    Word::generator(&Alphabet::free_ab(), letter)
        .expect("generator of F(a, b)")
        .pow(e)
}

/// `b^i a^e b^-i`
fn b_conjugate_of_a_power(i: usize, e: usize) -> Word {
    power(A, e as i64)
        .conjugate(&power(B, i as i64))
        .expect("same alphabet")
}

/// `a^i b a^-i`
fn a_conjugate_of_b_power(i: usize, e: usize) -> Word {
    power(B, e as i64)
        .conjugate(&power(A, i as i64))
        .expect("same alphabet")
}

/// The `m` generators of `H(m,n,k,ℓ)`.
pub fn family_h(spec: &FamilySpec) -> Vec<Word> {
    let FamilySpec { m, n, k, l } = *spec;
    let mut gens: Vec<Word> = (0..=k).map(|i| b_conjugate_of_a_power(i, 1)).collect();
    gens.push(b_conjugate_of_a_power(k + 1, n - l));
    gens.extend((k + 2..m).map(|i| b_conjugate_of_a_power(i, n)));
    gens
}

/// The `n` generators `aⁱ b a⁻ⁱ`, `0 ≤ i < n`.
pub fn family_k(n: usize) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(Error::RankTooSmall { name: "n", value: n as i64 });
    }
    Ok((0..n).map(|i| a_conjugate_of_b_power(i, 1)).collect())
}

/// `k(n−1) + ℓ`.
pub fn theorem_rank(spec: &FamilySpec) -> usize {
    spec.k * (spec.n - 1) + spec.l
}

/// Subgroups of ranks `m` and `n` whose intersection has the maximal rank
/// `(m−1)(n−1)+1`:
/// `H = ⟨a, bab⁻¹, …, b^(m−2) a b^−(m−2), b^(m−1)⟩` and
/// `K = ⟨b, aba⁻¹, …, a^(n−2) b a^−(n−2), a^(n−1)⟩`.
pub fn corollary_pair(m: usize, n: usize) -> Result<(Vec<Word>, Vec<Word>)> {
    if m < 2 {
        return Err(Error::RankTooSmall { name: "m", value: m as i64 });
    }
    if n < 2 {
        return Err(Error::RankTooSmall { name: "n", value: n as i64 });
    }
    let mut h: Vec<Word> = (0..=m - 2).map(|i| b_conjugate_of_a_power(i, 1)).collect();
    h.push(power(B, m as i64 - 1));
    let mut k: Vec<Word> = (0..=n - 2).map(|i| a_conjugate_of_b_power(i, 1)).collect();
    k.push(power(A, n as i64 - 1));
    Ok((h, k))
}

pub fn max_intersection_rank(m: usize, n: usize) -> usize {
    (m - 1) * (n - 1) + 1
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Family(FamilySpec),
    Corollary,
}

#[derive(Clone, Debug)]
pub struct AchievablePair {
    pub construction: Construction,
    pub h: Vec<Word>,
    pub k: Vec<Word>,
    pub target: usize,
}

impl AchievablePair {
    /// Targets 0 and 1 are realised by the family formula but lie below the
    /// range `N ≥ 2` covered by the original existence statement.
    pub fn below_stated_range(&self) -> bool {
        self.target < 2
    }
}

/// Subgroups of ranks `m` and `n` whose intersection has rank `target`,
/// for any `0 ≤ target ≤ (m−1)(n−1)+1`.
pub fn achievable_pair(m: usize, n: usize, target: usize) -> Result<AchievablePair> {
    if m < 2 {
        return Err(Error::RankTooSmall { name: "m", value: m as i64 });
    }
    if n < 2 {
        return Err(Error::RankTooSmall { name: "n", value: n as i64 });
    }
    let max = max_intersection_rank(m, n);
    if target > max {
        return Err(Error::TargetRankOutOfRange { m, n, target: target as i64, max });
    }
    if target == max {
        let (h, k) = corollary_pair(m, n)?;
        return Ok(AchievablePair { construction: Construction::Corollary, h, k, target });
    }
    let k = (m - 2).min(target / (n - 1));
    let spec = FamilySpec::new(m, n, k, target - k * (n - 1))?;
    debug_assert_eq!(theorem_rank(&spec), target);
    Ok(AchievablePair {
        construction: Construction::Family(spec),
        h: family_h(&spec),
        k: family_k(n)?,
        target,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCase {
    pub spec: FamilySpec,
    pub expected: usize,
    /// `None` when the computation itself failed (size cap).
    pub computed: Option<usize>,
    pub rank_h: Option<usize>,
    pub rank_k: Option<usize>,
}

impl SweepCase {
    pub fn intersection_ok(&self) -> bool {
        self.computed == Some(self.expected)
    }

    pub fn factor_ranks_ok(&self) -> bool {
        self.rank_h == Some(self.spec.m) && self.rank_k == Some(self.spec.n)
    }

    pub fn pass(&self) -> bool {
        self.intersection_ok() && self.factor_ranks_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub m_max: usize,
    pub n_max: usize,
    pub cases: Vec<SweepCase>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(SweepCase::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepCase> {
        self.cases.iter().filter(|c| !c.pass())
    }

    /// Columns `m,n,k,l,expected,computed,pass`; a failed computation
    /// leaves `computed` empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,n,k,l,expected,computed,pass\n");
        for c in &self.cases {
            let computed = c.computed.map(|r| r.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                c.spec.m,
                c.spec.n,
                c.spec.k,
                c.spec.l,
                c.expected,
                computed,
                c.pass()
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let passed = self.cases.iter().filter(|c| c.pass()).count();
        let mut out = format!(
            "theorem sweep m ≤ {}, n ≤ {}: {}/{} cases pass\n",
            self.m_max,
            self.n_max,
            passed,
            self.cases.len()
        );
        for c in self.failures() {
            let fmt = |r: Option<usize>| r.map_or("error".to_string(), |r| r.to_string());
            let _ = writeln!(
                out,
                "  FAIL m={} n={} k={} l={}: expected {}, computed {}, rank H {}, rank K {}",
                c.spec.m,
                c.spec.n,
                c.spec.k,
                c.spec.l,
                c.expected,
                fmt(c.computed),
                fmt(c.rank_h),
                fmt(c.rank_k)
            );
        }
        out
    }
}

/// Computes one family case. Never fails: errors are recorded as `None`.
pub fn check_family(spec: &FamilySpec) -> SweepCase {
    let alpha = Alphabet::free_ab();
    let h = family_h(spec);
    let k = family_k(spec.n).expect("spec has n ≥ 2");
    let rank_of = |gens: &[Word]| StallingsGraph::subgroup(gens, &alpha).ok().map(|g| g.rank());
    SweepCase {
        spec: *spec,
        expected: theorem_rank(spec),
        computed: intersection_rank(&h, &k, &alpha).ok(),
        rank_h: rank_of(&h),
        rank_k: rank_of(&k),
    }
}

/// Checks the rank formula for every family member with `m ≤ m_max`,
/// `n ≤ n_max`. Mismatches are reported, not raised.
pub fn verify_theorem_sweep(m_max: usize, n_max: usize) -> SweepReport {
    SweepReport {
        m_max,
        n_max,
        cases: FamilySpec::enumerate(m_max, n_max).map(|s| check_family(&s)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryCase {
    pub m: usize,
    pub n: usize,
    pub expected: usize,
    pub computed: Option<usize>,
}

impl CorollaryCase {
    pub fn pass(&self) -> bool {
        self.computed == Some(self.expected)
    }
}

pub fn verify_corollary_sweep(m_max: usize, n_max: usize) -> Vec<CorollaryCase> {
    let alpha = Alphabet::free_ab();
    (2..=m_max)
        .flat_map(|m| (2..=n_max).map(move |n| (m, n)))
        .map(|(m, n)| {
            let (h, k) = corollary_pair(m, n).expect("m, n ≥ 2");
            CorollaryCase {
                m,
                n,
                expected: max_intersection_rank(m, n),
                computed: intersection_rank(&h, &k, &alpha).ok(),
            }
        })
        .collect()
}

/// Ranks of a pair and whether they satisfy the factor-two bound
/// `r(H∩K)−1 ≤ 2(r(H)−1)(r(K)−1)` and the bound without the factor two.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct NeumannStatus {
    pub rank_h: usize,
    pub rank_k: usize,
    pub rank_intersection: usize,
    pub weak: bool,
    pub strong: bool,
}

pub fn neumann_check(gens_h: &[Word], gens_k: &[Word], alphabet: &Alphabet) -> Result<NeumannStatus> {
    let rank_h = StallingsGraph::subgroup(gens_h, alphabet)?.rank();
    let rank_k = StallingsGraph::subgroup(gens_k, alphabet)?.rank();
    if rank_h == 0 {
        return Err(Error::TrivialSubgroup("first"));
    }
    if rank_k == 0 {
        return Err(Error::TrivialSubgroup("second"));
    }
    let rank_intersection = intersection_rank(gens_h, gens_k, alphabet)?;
    let lhs = rank_intersection as i64 - 1;
    let product = (rank_h as i64 - 1) * (rank_k as i64 - 1);
    Ok(NeumannStatus {
        rank_h,
        rank_k,
        rank_intersection,
        weak: lhs <= 2 * product,
        strong: lhs <= product,
    })
}

#[derive(Clone, Debug)]
pub struct NeumannFinding {
    pub h: Vec<Word>,
    pub k: Vec<Word>,
    pub status: NeumannStatus,
}

#[derive(Clone, Debug, Default)]
pub struct NeumannTrials {
    pub trials: usize,
    pub weak_violations: Vec<NeumannFinding>,
    pub strong_violations: Vec<NeumannFinding>,
}

impl NeumannTrials {
    pub fn passed(&self) -> bool {
        self.weak_violations.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "bound trials: {} pairs, {} violations of the factor-two bound, {} of the bound without it\n",
            self.trials,
            self.weak_violations.len(),
            self.strong_violations.len()
        );
        for f in self.weak_violations.iter().chain(&self.strong_violations) {
            let join = |ws: &[Word]| ws.iter().map(Word::to_string).collect::<Vec<_>>().join(", ");
            let _ = writeln!(
                out,
                "  H = <{}> (rank {}), K = <{}> (rank {}): intersection rank {}",
                join(&f.h),
                f.status.rank_h,
                join(&f.k),
                f.status.rank_k,
                f.status.rank_intersection
            );
        }
        out
    }
}

/// Random pairs of subgroups of `F(a, b)`, each with 2 to 5 generators of
/// length at most 10, checked against both bounds.
pub fn neumann_trials<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> NeumannTrials {
    let alpha = Alphabet::free_ab();
    let mut out = NeumannTrials { trials, ..Default::default() };
    for _ in 0..trials {
        let h = random_generators(rng, &alpha, 2..=5, 10);
        let k = random_generators(rng, &alpha, 2..=5, 10);
        // nonidentity generators always give rank ≥ 1
        let status = neumann_check(&h, &k, &alpha).expect("random subgroups are nontrivial");
        let finding = || NeumannFinding { h: h.clone(), k: k.clone(), status };
        if !status.weak {
            out.weak_violations.push(finding());
        }
        if !status.strong {
            out.strong_violations.push(finding());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn rendered(ws: &[Word]) -> Vec<String> {
        ws.iter().map(Word::to_string).collect()
    }

    fn spec(m: usize, n: usize, k: usize, l: usize) -> FamilySpec {
        FamilySpec::new(m, n, k, l).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(2, 2, 0, 1).is_ok());
        assert!(FamilySpec::new(1, 2, 0, 0).is_err());
        assert!(FamilySpec::new(2, 1, 0, 0).is_err());
        assert!(FamilySpec::new(3, 3, 2, 0).is_err());
        assert!(FamilySpec::new(3, 3, 0, 3).is_err());
        assert!(FamilySpec::from_signed(3, 3, -1, 0).is_err());
        let msg = FamilySpec::new(3, 3, 2, 0).unwrap_err().to_string();
        assert!(msg.contains("0 ≤ k ≤ m−2, 0 ≤ ℓ ≤ n−1"), "{msg}");
        // sum over m of (m−1), times sum over n of n
        assert_eq!(FamilySpec::enumerate(7, 7).count(), 21 * 27);
    }

    #[test]
    fn family_h_examples() {
        assert_eq!(rendered(&family_h(&spec(2, 2, 0, 1))), ["a", "bab^-1"]);
        assert_eq!(rendered(&family_h(&spec(3, 3, 1, 2))), ["a", "bab^-1", "b^2ab^-2"]);
        assert_eq!(
            rendered(&family_h(&spec(4, 3, 0, 0))),
            ["a", "ba^3b^-1", "b^2a^3b^-2", "b^3a^3b^-3"]
        );
        assert_eq!(rendered(&family_h(&spec(2, 2, 0, 0))), ["a", "ba^2b^-1"]);
    }

    #[test]
    fn family_k_examples() {
        assert_eq!(rendered(&family_k(2).unwrap()), ["b", "aba^-1"]);
        assert_eq!(rendered(&family_k(3).unwrap()), ["b", "aba^-1", "a^2ba^-2"]);
        assert_eq!(rendered(&family_k(4).unwrap()), ["b", "aba^-1", "a^2ba^-2", "a^3ba^-3"]);
        assert!(family_k(1).is_err());
    }

    #[test]
    fn theorem_rank_examples() {
        assert_eq!(theorem_rank(&spec(3, 3, 1, 2)), 4);
        assert_eq!(theorem_rank(&spec(5, 4, 0, 0)), 0);
        assert_eq!(theorem_rank(&spec(4, 3, 2, 1)), 5);
    }

    #[test]
    fn corollary_examples() {
        let alpha = Alphabet::free_ab();
        let (h, k) = corollary_pair(2, 2).unwrap();
        assert_eq!((rendered(&h), rendered(&k)), (vec!["a".into(), "b".into()], vec!["b".into(), "a".into()]));
        assert_eq!(intersection_rank(&h, &k, &alpha).unwrap(), 2);

        let (h, k) = corollary_pair(3, 2).unwrap();
        assert_eq!(rendered(&h), ["a", "bab^-1", "b^2"]);
        assert_eq!(rendered(&k), ["b", "a"]);
        assert_eq!(intersection_rank(&h, &k, &alpha).unwrap(), 3);

        let (h, k) = corollary_pair(3, 3).unwrap();
        assert_eq!(rendered(&h), ["a", "bab^-1", "b^2"]);
        assert_eq!(rendered(&k), ["b", "aba^-1", "a^2"]);
        assert_eq!(intersection_rank(&h, &k, &alpha).unwrap(), 5);

        assert!(corollary_pair(1, 3).is_err());
        assert!(corollary_pair(3, 1).is_err());
    }

    #[test]
    fn achievable_examples() {
        let alpha = Alphabet::free_ab();
        let p = achievable_pair(3, 3, 5).unwrap();
        assert_eq!(p.construction, Construction::Corollary);
        assert_eq!((p.h.clone(), p.k.clone()), corollary_pair(3, 3).unwrap());

        let p = achievable_pair(3, 3, 0).unwrap();
        assert_eq!(p.construction, Construction::Family(spec(3, 3, 0, 0)));
        assert!(p.below_stated_range());
        assert_eq!(intersection_rank(&p.h, &p.k, &alpha).unwrap(), 0);

        let p = achievable_pair(4, 3, 3).unwrap();
        assert_eq!(p.construction, Construction::Family(spec(4, 3, 1, 1)));
        assert_eq!(intersection_rank(&p.h, &p.k, &alpha).unwrap(), 3);

        // (m−1)(n−1) itself goes through the family with k = m−2, ℓ = n−1
        let p = achievable_pair(3, 4, 6).unwrap();
        assert_eq!(p.construction, Construction::Family(spec(3, 4, 1, 3)));

        assert!(matches!(achievable_pair(3, 3, 6), Err(Error::TargetRankOutOfRange { .. })));
    }

    #[test]
    fn achievable_covers_every_target() {
        let alpha = Alphabet::free_ab();
        for m in 2..=5 {
            for n in 2..=5 {
                for target in 0..=max_intersection_rank(m, n) {
                    let p = achievable_pair(m, n, target).unwrap();
                    let rh = StallingsGraph::subgroup(&p.h, &alpha).unwrap().rank();
                    let rk = StallingsGraph::subgroup(&p.k, &alpha).unwrap().rank();
                    assert_eq!((rh, rk), (m, n));
                    assert_eq!(intersection_rank(&p.h, &p.k, &alpha).unwrap(), target);
                }
            }
        }
    }

    #[test]
    fn sweep_examples() {
        let r = verify_theorem_sweep(2, 2);
        assert_eq!(r.cases.len(), 2);
        assert_eq!(r.cases.iter().map(|c| c.expected).collect::<Vec<_>>(), [0, 1]);
        assert!(r.passed());

        let r = verify_theorem_sweep(3, 3);
        assert_eq!(r.cases.len(), 15);
        let fig = r.cases.iter().find(|c| c.spec == spec(3, 3, 1, 2)).unwrap();
        assert_eq!((fig.expected, fig.computed), (4, Some(4)));
        assert!(r.passed());

        let csv = r.to_csv();
        assert!(csv.starts_with("m,n,k,l,expected,computed,pass\n"));
        assert!(csv.contains("3,3,1,2,4,4,true\n"));
        assert_eq!(csv.lines().count(), 16);
    }

    #[test]
    fn sweep_to_six() {
        let r = verify_theorem_sweep(6, 6);
        assert!(r.passed(), "{}", r.summary());
        // ℓ = n − j at k = m − 2 gives (m−1)(n−1) − (j−1)
        for c in r.cases.iter().filter(|c| c.spec.k == c.spec.m - 2) {
            let j = c.spec.n - c.spec.l;
            assert_eq!(c.computed, Some((c.spec.m - 1) * (c.spec.n - 1) - (j - 1)));
        }
    }

    #[test]
    fn increasing_l_adds_one() {
        for s in FamilySpec::enumerate(5, 5).filter(|s| s.l + 1 < s.n) {
            let next = FamilySpec::new(s.m, s.n, s.k, s.l + 1).unwrap();
            let (a, b) = (check_family(&s).computed.unwrap(), check_family(&next).computed.unwrap());
            assert_eq!(b, a + 1, "{s:?}");
        }
    }

    #[test]
    fn corollary_sweep() {
        assert!(verify_corollary_sweep(5, 5).iter().all(CorollaryCase::pass));
    }

    #[test]
    fn neumann_examples() {
        let alpha = Alphabet::free_ab();
        let s = neumann_check(&family_h(&spec(3, 3, 1, 2)), &family_k(3).unwrap(), &alpha).unwrap();
        assert_eq!(s.rank_intersection, 4);
        assert!(s.weak && s.strong);

        let (h, k) = corollary_pair(3, 3).unwrap();
        let s = neumann_check(&h, &k, &alpha).unwrap();
        assert_eq!((s.rank_intersection, s.weak, s.strong), (5, true, true));

        let a = vec![parse_word("a", &alpha).unwrap()];
        let b = vec![parse_word("b", &alpha).unwrap()];
        let s = neumann_check(&a, &b, &alpha).unwrap();
        assert_eq!((s.rank_intersection, s.weak, s.strong), (0, true, true));

        assert_eq!(neumann_check(&[], &b, &alpha).unwrap_err(), Error::TrivialSubgroup("first"));
        assert_eq!(neumann_check(&a, &[], &alpha).unwrap_err(), Error::TrivialSubgroup("second"));
    }
}
