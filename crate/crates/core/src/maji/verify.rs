use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ns::{NeutrosophicTriple, Universe, EQ_TOLERANCE};

use super::{
    houses_example, maji_complement, maji_intersection, maji_null, maji_subset_violation,
    maji_union, MajiNsSet, MajiParameter, MajiParameterSet,
};

/// Random search settings for [`verify_maji_propositions`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_universe: usize,
    pub max_parameters: usize,
    /// Component values are multiples of `1 / grid_divisions`.
    pub grid_divisions: u32,
    pub execution: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0x6e73_2d73_6574,
            cases: 1000,
            max_universe: 5,
            max_parameters: 4,
            grid_divisions: 20,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PropositionStatus {
    Holds,
    Fails,
}

/// A concrete instance on which a claimed law breaks.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    /// `fixture` or `random case <k>`.
    pub source: String,
    pub operands: Vec<(String, MajiNsSet)>,
    /// Left-hand side, absent when its evaluation failed (empty intersection).
    pub lhs: Option<MajiNsSet>,
    pub rhs: Option<MajiNsSet>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropositionOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: PropositionStatus,
    /// Instances examined, fixture included.
    pub cases_checked: usize,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropositionReport {
    pub seed: u64,
    pub random_cases: usize,
    pub tolerance: f64,
    pub propositions: Vec<PropositionOutcome>,
}

impl PropositionReport {
    pub fn get(&self, id: &str) -> Option<&PropositionOutcome> {
        self.propositions.iter().find(|p| p.id == id)
    }
}

#[derive(Clone, Copy)]
enum Law {
    UnionIdempotent,
    UnionCommutative,
    IntersectionIdempotent,
    IntersectionCommutative,
    UnionNullIdentity,
    IntersectionNullAbsorbing,
    ComplementInvolution,
    UnionAssociative,
    IntersectionAssociative,
    UnionDistributes,
    IntersectionDistributes,
    NullIsSubset,
}

const LAWS: [(Law, &str, &str); 12] = [
    (Law::UnionIdempotent, "2.1(1)", "(H,A) ∪ (H,A) = (H,A)"),
    (
        Law::UnionCommutative,
        "2.1(2)",
        "(H,A) ∪ (G,B) = (G,B) ∪ (H,A)",
    ),
    (
        Law::IntersectionIdempotent,
        "2.1(3)",
        "(H,A) ∩ (H,A) = (H,A)",
    ),
    (
        Law::IntersectionCommutative,
        "2.1(4)",
        "(H,A) ∩ (G,B) = (G,B) ∩ (H,A)",
    ),
    (Law::UnionNullIdentity, "2.1(5)", "(H,A) ∪ Φ = (H,A)"),
    (Law::IntersectionNullAbsorbing, "2.1(6)", "(H,A) ∩ Φ = Φ"),
    (Law::ComplementInvolution, "2.1(7)", "[(H,A)^c]^c = (H,A)"),
    (
        Law::UnionAssociative,
        "2.2(1)",
        "(H,A) ∪ [(G,B) ∪ (K,C)] = [(H,A) ∪ (G,B)] ∪ (K,C)",
    ),
    (
        Law::IntersectionAssociative,
        "2.2(2)",
        "(H,A) ∩ [(G,B) ∩ (K,C)] = [(H,A) ∩ (G,B)] ∩ (K,C)",
    ),
    (
        Law::UnionDistributes,
        "2.2(3)",
        "(H,A) ∪ [(G,B) ∩ (K,C)] = [(H,A) ∪ (G,B)] ∩ [(H,A) ∪ (K,C)]",
    ),
    (
        Law::IntersectionDistributes,
        "2.2(4)",
        "(H,A) ∩ [(G,B) ∪ (K,C)] = [(H,A) ∩ (G,B)] ∪ [(H,A) ∩ (K,C)]",
    ),
    (
        Law::NullIsSubset,
        "null-subset",
        "Φ ⊆ (H,A) for every (H,A)",
    ),
];

/// Three operands plus the null set over the first operand's parameters.
struct Instance {
    h: MajiNsSet,
    g: MajiNsSet,
    k: MajiNsSet,
    null: MajiNsSet,
}

impl Instance {
    fn new(h: MajiNsSet, g: MajiNsSet, k: MajiNsSet) -> Self {
        let null = maji_null(h.universe().clone(), h.parameters().clone());
        Self { h, g, k, null }
    }

    fn fixture() -> Self {
        let h = houses_example();
        let null = maji_null(h.universe().clone(), h.parameters().clone());
        let k = maji_complement(&maji_complement(&h));
        Self {
            g: null.clone(),
            h,
            k,
            null,
        }
    }

    fn operands(&self, law: Law) -> Vec<(String, MajiNsSet)> {
        let named = |name: &str, set: &MajiNsSet| (name.to_owned(), set.clone());
        match law {
            Law::UnionIdempotent | Law::IntersectionIdempotent | Law::ComplementInvolution => {
                vec![named("H", &self.h)]
            }
            Law::UnionNullIdentity | Law::IntersectionNullAbsorbing | Law::NullIsSubset => {
                vec![named("H", &self.h), named("Φ", &self.null)]
            }
            Law::UnionCommutative | Law::IntersectionCommutative => {
                vec![named("H", &self.h), named("G", &self.g)]
            }
            _ => vec![
                named("H", &self.h),
                named("G", &self.g),
                named("K", &self.k),
            ],
        }
    }

    /// `None` when the law holds on this instance.
    fn check(&self, law: Law) -> Option<Failure> {
        let (h, g, k) = (&self.h, &self.g, &self.k);
        let (lhs, rhs) = match law {
            Law::NullIsSubset => {
                let detail = maji_subset_violation(&self.null, h).expect("shared universe")?;
                return Some(Failure {
                    lhs: None,
                    rhs: None,
                    detail: format!("Φ ⊄ H: {detail}"),
                });
            }
            Law::UnionIdempotent => (maji_union(h, h), Ok(h.clone())),
            Law::UnionCommutative => (maji_union(h, g), maji_union(g, h)),
            Law::IntersectionIdempotent => (maji_intersection(h, h), Ok(h.clone())),
            Law::IntersectionCommutative => (maji_intersection(h, g), maji_intersection(g, h)),
            Law::UnionNullIdentity => (maji_union(h, &self.null), Ok(h.clone())),
            Law::IntersectionNullAbsorbing => {
                (maji_intersection(h, &self.null), Ok(self.null.clone()))
            }
            Law::ComplementInvolution => (Ok(maji_complement(&maji_complement(h))), Ok(h.clone())),
            Law::UnionAssociative => (
                maji_union(g, k).and_then(|gk| maji_union(h, &gk)),
                maji_union(h, g).and_then(|hg| maji_union(&hg, k)),
            ),
            Law::IntersectionAssociative => (
                maji_intersection(g, k).and_then(|gk| maji_intersection(h, &gk)),
                maji_intersection(h, g).and_then(|hg| maji_intersection(&hg, k)),
            ),
            Law::UnionDistributes => (
                maji_intersection(g, k).and_then(|gk| maji_union(h, &gk)),
                maji_union(h, g)
                    .and_then(|hg| maji_union(h, k).and_then(|hk| maji_intersection(&hg, &hk))),
            ),
            Law::IntersectionDistributes => (
                maji_union(g, k).and_then(|gk| maji_intersection(h, &gk)),
                compose_union_of_intersections(h, g, k),
            ),
        };
        compare(lhs, rhs)
    }
}

/// `(H ∩ G) ∪ (H ∩ K)`, where an empty intersection contributes nothing.
fn compose_union_of_intersections(
    h: &MajiNsSet,
    g: &MajiNsSet,
    k: &MajiNsSet,
) -> Result<MajiNsSet> {
    match (maji_intersection(h, g), maji_intersection(h, k)) {
        (Ok(a), Ok(b)) => maji_union(&a, &b),
        (Ok(a), Err(Error::EmptyIntersection)) => Ok(a),
        (Err(Error::EmptyIntersection), Ok(b)) => Ok(b),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

struct Failure {
    lhs: Option<MajiNsSet>,
    rhs: Option<MajiNsSet>,
    detail: String,
}

impl Failure {
    /// Whether the failure is a value difference rather than one side
    /// being undefined. Preferred as a witness.
    fn concrete(&self) -> bool {
        self.lhs.is_some() == self.rhs.is_some()
    }
}

fn compare(lhs: Result<MajiNsSet>, rhs: Result<MajiNsSet>) -> Option<Failure> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            if l.approx_eq(&r, EQ_TOLERANCE) {
                None
            } else {
                let detail = first_difference(&l, &r);
                Some(Failure {
                    lhs: Some(l),
                    rhs: Some(r),
                    detail,
                })
            }
        }
        (Err(Error::EmptyIntersection), Err(Error::EmptyIntersection)) => None,
        (l, r) => {
            let side = if l.is_err() { "left" } else { "right" };
            Some(Failure {
                lhs: l.ok(),
                rhs: r.ok(),
                detail: format!("{side}-hand side has an empty parameter intersection"),
            })
        }
    }
}

fn first_difference(l: &MajiNsSet, r: &MajiNsSet) -> String {
    if !l.parameters().same_members(r.parameters()) {
        return format!(
            "parameter sets differ: {} vs {}",
            l.parameters(),
            r.parameters()
        );
    }
    for (k, p) in l.parameters().iter().enumerate() {
        let theirs = r.row_of(p).expect("same members");
        for (x, (a, b)) in l.universe().iter().zip(l.row(k).iter().zip(theirs)) {
            if !a.approx_eq(*b, EQ_TOLERANCE) {
                return format!("at ({p}, {x}): {a} vs {b}");
            }
        }
    }
    String::from("sets differ")
}

fn random_instance(config: &VerifyConfig, case: usize) -> Instance {
    let mut rng =
        ChaCha8Rng::seed_from_u64(config.seed ^ (case as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let m = rng.gen_range(1..=config.max_universe.max(1));
    let n = rng.gen_range(1..=config.max_parameters.max(1));
    let universe = Universe::new((1..=m).map(|j| format!("x{j}"))).expect("generated universe");
    let parent: Vec<MajiParameter> = (1..=n)
        .map(|j| MajiParameter::new(format!("e{j}")).expect("generated name"))
        .collect();
    let draw = |rng: &mut ChaCha8Rng| {
        let size = rng.gen_range(1..=n);
        let mut chosen: Vec<MajiParameter> = parent.choose_multiple(rng, size).cloned().collect();
        chosen.sort_by_key(|p| parent.iter().position(|q| q == p));
        let params = MajiParameterSet::new(chosen).expect("distinct draw");
        let step = f64::from(config.grid_divisions.max(1));
        let value =
            |rng: &mut ChaCha8Rng| f64::from(rng.gen_range(0..=config.grid_divisions)) / step;
        let cells: Vec<NeutrosophicTriple> = (0..params.len() * m)
            .map(|_| {
                NeutrosophicTriple::new(value(rng), value(rng), value(rng)).expect("grid value")
            })
            .collect();
        MajiNsSet::from_fn(universe.clone(), params, |p, x| cells[p * m + x])
    };
    let h = draw(&mut rng);
    let g = draw(&mut rng);
    let k = draw(&mut rng);
    Instance::new(h, g, k)
}

/// Checks every claimed law on the reference fixture first, then on
/// `config.cases` random instances. The witness is the fixture failure if
/// there is one, otherwise the lowest random case where both sides are
/// defined and differ, otherwise the lowest failing random case.
pub fn verify_maji_propositions(config: &VerifyConfig) -> PropositionReport {
    let fixture = Instance::fixture();
    let fixture_failures: Vec<Option<Failure>> =
        LAWS.iter().map(|&(law, _, _)| fixture.check(law)).collect();

    // per case and law: None if the law holds, Some(true) if both sides
    // evaluate but differ, Some(false) if only one side is defined
    let random: Vec<Vec<Option<bool>>> = config.execution.map_indexed(config.cases, |case| {
        let inst = random_instance(config, case);
        LAWS.iter()
            .map(|&(law, _, _)| inst.check(law).map(|f| f.concrete()))
            .collect()
    });

    let propositions = LAWS
        .iter()
        .zip(fixture_failures)
        .enumerate()
        .map(|(idx, (&(law, id, statement), fixture_failure))| {
            let witness = match fixture_failure {
                Some(fail) => Some(witness_from("fixture".into(), &fixture, law, fail)),
                None => random
                    .iter()
                    .position(|row| row[idx] == Some(true))
                    .or_else(|| random.iter().position(|row| row[idx].is_some()))
                    .map(|case| {
                        let inst = random_instance(config, case);
                        let fail = inst.check(law).expect("failure reproduces");
                        witness_from(format!("random case {case}"), &inst, law, fail)
                    }),
            };
            PropositionOutcome {
                id,
                statement,
                status: if witness.is_some() {
                    PropositionStatus::Fails
                } else {
                    PropositionStatus::Holds
                },
                cases_checked: config.cases + 1,
                witness,
            }
        })
        .collect();

    PropositionReport {
        seed: config.seed,
        random_cases: config.cases,
        tolerance: EQ_TOLERANCE,
        propositions,
    }
}

fn witness_from(source: String, inst: &Instance, law: Law, fail: Failure) -> Witness {
    Witness {
        source,
        operands: inst.operands(law),
        lhs: fail.lhs,
        rhs: fail.rhs,
        detail: fail.detail,
    }
}
