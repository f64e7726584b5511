use itertools::Itertools;

use crate::crystal::{fixed_lattice, is_torsion_free, CrystalGroup, HolonomyGroup};
use crate::error::{Error, Result};
use crate::genred::cyclic::{reduce_cyclic, reduce_theorem_a_i, ReduceOptions};
use crate::genred::greedy::greedy_reduce;
use crate::genred::report::{GenSetReport, Method};
use crate::genred::two_generated::{generating_pair, reduce_two_generated};
use crate::genred::verify::naive_generating_set;
use crate::linalg::IntMatrix;
use crate::module_rank::{default_pool, factorize, rank_upper_search, GModule, RankBounds};

/// Subsets tried per size in [`min_generators`] before giving up.
const SUBSET_LIMIT: usize = 200_000;

fn preference(m: Method) -> u8 {
    match m {
        Method::TheoremAII => 0,
        Method::TheoremAI => 1,
        Method::TheoremC => 2,
        Method::Greedy => 3,
        Method::Naive => 4,
    }
}

fn inapplicable(e: &Error) -> bool {
    matches!(e, Error::WrongHolonomyShape(_) | Error::InputNotTorsionFree(_) | Error::NotAGeneratingPair)
}

/// Every applicable construction followed by greedy reduction of the naive
/// set, in a fixed order. Constructions whose hypotheses fail are skipped.
pub fn all_reductions(group: &CrystalGroup, opts: ReduceOptions) -> Result<Vec<GenSetReport>> {
    let mut candidates = Vec::new();
    let mut attempts: Vec<Result<GenSetReport>> = vec![reduce_cyclic(group, opts), reduce_theorem_a_i(group, opts)];
    if let Some((x, y)) = generating_pair(group.holonomy()) {
        attempts.push(reduce_two_generated(group, x, y, opts));
    }
    for a in attempts {
        match a {
            Ok(r) => candidates.push(r),
            Err(e) if inapplicable(&e) => {}
            Err(e) => return Err(e),
        }
    }
    let naive = naive_generating_set(group)?;
    candidates.push(greedy_reduce(group, &naive.generators)?);
    Ok(candidates)
}

/// The smallest report, ties going to the theorems.
pub fn pick_best(reports: &[GenSetReport]) -> Option<&GenSetReport> {
    reports.iter().min_by_key(|r| (r.size, preference(r.method)))
}

/// Smallest verified set over [`all_reductions`].
pub fn auto_reduce(group: &CrystalGroup, opts: ReduceOptions) -> Result<GenSetReport> {
    let all = all_reductions(group, opts)?;
    Ok(pick_best(&all).expect("greedy candidate always present").clone())
}

/// Smallest number of elements generating the subgroup `elements`, by
/// exhaustive search over subsets in table order.
pub fn min_generators(hol: &HolonomyGroup, elements: &[usize]) -> usize {
    let target = elements.len();
    let nontrivial: Vec<usize> = elements.iter().copied().filter(|&e| e != 0).collect();
    if nontrivial.is_empty() {
        return 0;
    }
    for k in 1..=nontrivial.len() {
        for combo in nontrivial.iter().copied().combinations(k).take(SUBSET_LIMIT) {
            if hol.closure(&combo).len() == target {
                return k;
            }
        }
    }
    nontrivial.len()
}

/// A Sylow `p`-subgroup, grown by adding `p`-elements while the generated
/// subgroup stays a `p`-group.
pub fn sylow_subgroup(hol: &HolonomyGroup, p: u64) -> Vec<usize> {
    let full = factorize(hol.order() as u64)
        .into_iter()
        .find(|&(q, _)| q == p)
        .map_or(1, |(q, e)| q.pow(e) as usize);
    let is_p_power = |mut k: usize| {
        while k % p as usize == 0 {
            k /= p as usize;
        }
        k == 1
    };
    let mut gens: Vec<usize> = Vec::new();
    let mut current = vec![0usize];
    while current.len() < full {
        let mut grown = false;
        for g in 0..hol.order() {
            if current.contains(&g) || !is_p_power(hol.element_order(g) as usize) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(g);
            let closure = hol.closure(&trial);
            if is_p_power(closure.len()) {
                gens = trial;
                current = closure;
                grown = true;
                break;
            }
        }
        if !grown {
            break;
        }
    }
    current
}

/// Simple: non-trivial with no proper non-trivial normal subgroup.
pub fn is_simple(hol: &HolonomyGroup) -> bool {
    let order = hol.order();
    if order == 1 {
        return false;
    }
    (1..order).all(|g| {
        let conjugates: Vec<usize> = (0..order).map(|h| hol.mul(hol.mul(h, g), hol.inverse(h))).unique().collect();
        hol.closure(&conjugates).len() == order
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowInfo {
    pub prime: u64,
    pub order: usize,
    pub min_generators: usize,
    pub fixed_rank: usize,
}

/// One theorem's hypotheses and predicted bound for a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremBound {
    pub name: &'static str,
    pub applies: bool,
    pub bound: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub dim: usize,
    pub order: usize,
    pub factorization: Vec<(u64, u32)>,
    pub cyclic: bool,
    pub simple: bool,
    pub holonomy_min_generators: usize,
    pub fixed_rank: usize,
    pub torsion_free: bool,
    pub module_rank: RankBounds,
    pub sylow: Vec<SylowInfo>,
    pub theorems: Vec<TheoremBound>,
    pub reductions: Vec<GenSetReport>,
    pub best: GenSetReport,
}

impl BoundReport {
    pub fn theorem(&self, name: &str) -> Option<&TheoremBound> {
        self.theorems.iter().find(|t| t.name == name)
    }

    /// Smallest bound among the theorems that apply.
    pub fn best_predicted(&self) -> Option<usize> {
        self.theorems.iter().filter(|t| t.applies).filter_map(|t| t.bound).min()
    }
}

fn theorem(name: &'static str, applies: bool, bound: usize, detail: String) -> TheoremBound {
    TheoremBound { name, applies, bound: applies.then_some(bound), detail }
}

/// Group invariants, the theorems whose hypotheses hold with their bounds,
/// and the best verified construction.
pub fn bound_report(group: &CrystalGroup, opts: ReduceOptions) -> Result<BoundReport> {
    let hol = group.holonomy();
    let n = group.dim();
    let order = hol.order();
    let factorization = factorize(order as u64);
    let cyclic = hol.cyclic_generator().is_some();
    let simple = is_simple(hol);
    let all: Vec<usize> = (0..order).collect();
    let d_g = min_generators(hol, &all);
    let fixed_rank = fixed_lattice(hol.generators(), n).rank();
    let torsion_free = is_torsion_free(group)?.torsion_free;
    let module = GModule::from_holonomy(hol);
    let module_rank = rank_upper_search(&module, &default_pool(&module, opts.seed), opts.budget);

    let sylow: Vec<SylowInfo> = factorization
        .iter()
        .map(|&(p, _)| {
            let elements = sylow_subgroup(hol, p);
            let mats: Vec<IntMatrix> = elements.iter().map(|&e| hol.element(e).clone()).collect();
            SylowInfo {
                prime: p,
                order: elements.len(),
                min_generators: min_generators(hol, &elements),
                fixed_rank: fixed_lattice(&mats, n).rank(),
            }
        })
        .collect();

    let large_prime = factorization.iter().any(|&(p, _)| p > 3);
    let mut theorems = vec![
        theorem(
            "THEOREM_A_I",
            cyclic && order >= 3 && large_prime,
            n.saturating_sub(2),
            format!("cyclic={cyclic}, |G|={order}"),
        ),
        theorem(
            "THEOREM_A_II",
            cyclic && order >= 3 && !large_prime && torsion_free,
            n.saturating_sub(1),
            format!("cyclic={cyclic}, |G|={order}, torsion_free={torsion_free}"),
        ),
    ];
    let coprime6 = order > 1 && order % 2 != 0 && order % 3 != 0;
    let chain = if coprime6 {
        let j = sylow.iter().max_by_key(|s| (s.min_generators, std::cmp::Reverse(s.prime))).expect("order > 1");
        let a = if j.prime <= 19 { 2 } else { 3 };
        let r = j.fixed_rank;
        let value = a * (n - r) / (j.prime as usize - 1) + r + 1;
        format!("p={}, d(P)={}, fixed_rank={r}, a={a}, chain={value}", j.prime, j.min_generators)
    } else {
        format!("|G|={order}")
    };
    theorems.push(theorem("THEOREM_B", coprime6, n, chain));
    theorems.push(theorem("THEOREM_C", torsion_free && d_g <= 2, n, format!("d(G)={d_g}, torsion_free={torsion_free}")));
    theorems.push(theorem("COROLLARY_4_1", torsion_free, 2 * n, format!("torsion_free={torsion_free}")));
    let c2 = order == 2;
    theorems.push(theorem(
        "COROLLARY_4_2",
        torsion_free && simple && !c2,
        n.saturating_sub(1),
        format!("simple={simple}, torsion_free={torsion_free}"),
    ));
    theorems.push(theorem(
        "REMARK_2_1",
        true,
        module_rank.upper + d_g,
        format!("rk_upper={}, d(G)={d_g}", module_rank.upper),
    ));
    let reductions = all_reductions(group, opts)?;
    let best = pick_best(&reductions).expect("greedy candidate always present").clone();
    Ok(BoundReport {
        dim: n,
        order,
        factorization,
        cyclic,
        simple,
        holonomy_min_generators: d_g,
        fixed_rank,
        torsion_free,
        module_rank,
        sylow,
        theorems,
        reductions,
        best,
    })
}
