use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::crystal::{coinvariant_split, fixed_lattice, is_torsion_free, AffineElement, CoinvariantSplit, CrystalGroup};
use crate::error::{Error, Result};
use crate::genred::greedy::greedy_reduce;
use crate::genred::report::{GenSetReport, Method, BUDGET_EXHAUSTED, KER_F_DISCREPANCY};
use crate::genred::verify::generates;
use crate::linalg::{extended_gcd, matrix_order, IntMatrix, IntVector, MatrixOrder, RatVector, UnimodularTransform};
use crate::module_rank::{default_pool, factorize, rank_upper_search, GModule, RankBounds, DEFAULT_BUDGET};

/// Search settings shared by the reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Span checks allowed per module rank search.
    pub budget: u64,
    /// Seed for the candidate pool order.
    pub seed: u64,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, seed: 0 }
    }
}

/// `γ ↦ z · y_i`, where `y` is the translation of `γ` in split coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FHomomorphism {
    pub coordinate: usize,
    pub scale: BigInt,
    pub numerator: BigInt,
    pub basis_change: UnimodularTransform,
}

impl FHomomorphism {
    /// `None` when the value is not an integer (the element is not in the group).
    pub fn eval(&self, e: &AffineElement) -> Option<BigInt> {
        let y = self.basis_change.inverse.mul_rat_vec(&e.translation);
        let v = &y[self.coordinate] * BigRational::from_integer(self.scale.clone());
        v.is_integer().then(|| v.to_integer())
    }
}

/// Everything the cyclic reduction derives before the module search.
#[derive(Clone, Debug)]
pub struct CyclicSetup {
    pub order: usize,
    /// Lift of the cyclic generator with tail coordinates reduced into `[0, 1)`.
    pub alpha: AffineElement,
    pub split: CoinvariantSplit,
    pub f: FHomomorphism,
    pub sigma: BigInt,
    pub tau: BigInt,
    /// `alpha^sigma · ι(e_i)^tau`, with `f(beta) = 1`.
    pub beta: AffineElement,
    /// The action of `alpha` on the lattice `{y_i = 0}` in split coordinates.
    pub kernel_action: IntMatrix,
}

impl CyclicSetup {
    /// `ι` of the split basis vector `e_i`, in original coordinates.
    pub fn tail_unit(&self) -> AffineElement {
        AffineElement::translation(RatVector::from_ints(&self.split.transform.forward.column(self.f.coordinate)))
    }

    /// A vector of the kernel lattice (length `n - 1`) as a group element.
    pub fn embed_kernel_vector(&self, w: &[BigInt]) -> AffineElement {
        let mut y: IntVector = w.to_vec();
        y.insert(self.f.coordinate, BigInt::zero());
        AffineElement::translation(RatVector::from_ints(&self.split.transform.forward.mul_vec(&y)))
    }
}

/// Order of a cyclic holonomy group and a lift of a generator, preferring an
/// input generator of full order.
pub fn cyclic_lift(group: &CrystalGroup) -> Result<(usize, AffineElement)> {
    let hol = group.holonomy();
    let m = hol.order();
    for s in 0..group.lifts().len() {
        if hol.element_order(hol.generator_index(s)) == m as u64 {
            return Ok((m, group.generator_lift(s)));
        }
    }
    let g = hol
        .cyclic_generator()
        .ok_or_else(|| Error::WrongHolonomyShape(format!("holonomy of order {m} is not cyclic")))?;
    Ok((m, group.lift(g)))
}

/// Builds the homomorphism onto `Z` and the element `beta` with `f(beta) = 1`.
pub fn cyclic_setup(group: &CrystalGroup) -> Result<CyclicSetup> {
    if !group.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let n = group.dim();
    let (m, alpha) = cyclic_lift(group)?;
    let rho = group.holonomy().element(alpha.holonomy).clone();
    if fixed_lattice(std::slice::from_ref(&rho), n).rank() == 0 {
        return Err(Error::InternalContradiction(
            "cyclic holonomy without fixed vectors cannot act freely".into(),
        ));
    }
    let split = coinvariant_split(&rho);
    let forward = &split.transform.forward;
    let x = split.transform.inverse.mul_rat_vec(&alpha.translation);
    let mut shift: IntVector = vec![BigInt::zero(); n];
    for j in split.head_dim..n {
        shift[j] = x[j].floor().to_integer();
    }
    let alpha = AffineElement::new(
        &alpha.translation - &RatVector::from_ints(&forward.mul_vec(&shift)),
        alpha.holonomy,
    );
    let x = split.transform.inverse.mul_rat_vec(&alpha.translation);
    let coordinate = (split.head_dim..n)
        .filter(|&j| !x[j].is_zero())
        .min_by_key(|&j| (x[j].denom().clone(), j))
        .ok_or_else(|| match is_torsion_free(group) {
            Ok(v) if !v.torsion_free => Error::InputNotTorsionFree(Box::new(v.witness.expect("witness"))),
            _ => Error::InternalContradiction("generator lift has integral tail coordinates".into()),
        })?;
    let q = x[coordinate].numer().clone();
    let z = x[coordinate].denom().clone();
    let (_, s, _) = extended_gcd(&q, &z);
    let sigma = s.mod_floor(&z);
    let tau = (BigInt::one() - &sigma * &q) / &z;
    let f = FHomomorphism { coordinate, scale: z, numerator: q, basis_change: split.transform.clone() };
    let unit = AffineElement::translation(RatVector::from_ints(&forward.column(coordinate)));
    let sigma_i64 = i64::try_from(&sigma).map_err(|_| Error::InternalContradiction("exponent overflow".into()))?;
    let tau_i64 = i64::try_from(&tau).map_err(|_| Error::InternalContradiction("exponent overflow".into()))?;
    let beta = group.mul(&group.pow(&alpha, sigma_i64), &group.pow(&unit, tau_i64));
    if f.eval(&beta) != Some(BigInt::one()) {
        return Err(Error::InternalContradiction("f(beta) != 1".into()));
    }
    let kernel_action = split.matrix.delete_row_col(coordinate);
    Ok(CyclicSetup { order: m, alpha, split, f, sigma, tau, beta, kernel_action })
}

fn require_cyclic(group: &CrystalGroup, min_order: usize) -> Result<()> {
    let m = group.holonomy().order();
    if m < min_order {
        return Err(Error::WrongHolonomyShape(format!("holonomy order {m} is below {min_order}")));
    }
    if group.holonomy().cyclic_generator().is_none() {
        return Err(Error::WrongHolonomyShape(format!("holonomy of order {m} is not cyclic")));
    }
    Ok(())
}

fn has_large_prime(m: usize) -> bool {
    factorize(m as u64).iter().any(|&(p, _)| p > 3)
}

fn search_notes(bounds: &RankBounds) -> Vec<String> {
    let mut notes = Vec::new();
    if bounds.budget_exhausted {
        notes.push(BUDGET_EXHAUSTED.to_string());
    }
    if bounds.exceeds_formula {
        notes.push(format!("RANK_EXCEEDS_FORMULA({} > {})", bounds.upper, bounds.formula_bound.map_or(0, |f| f.value)));
    }
    notes
}

/// Module generators of the whole lattice plus one lift of the generator.
/// Needs cyclic holonomy whose order has a prime factor above 3; torsion is
/// allowed.
pub fn reduce_theorem_a_i(group: &CrystalGroup, opts: ReduceOptions) -> Result<GenSetReport> {
    if !group.is_normalized() {
        return Err(Error::NotNormalized);
    }
    require_cyclic(group, 3)?;
    let m = group.holonomy().order();
    if !has_large_prime(m) {
        return Err(Error::WrongHolonomyShape(format!("order {m} has no prime factor above 3")));
    }
    let (_, alpha) = cyclic_lift(group)?;
    let module = GModule::from_holonomy(group.holonomy());
    let bounds = rank_upper_search(&module, &default_pool(&module, opts.seed), opts.budget);
    let mut gens: Vec<AffineElement> =
        bounds.witness.iter().map(|w| AffineElement::translation(RatVector::from_ints(w))).collect();
    gens.push(alpha);
    let n = group.dim();
    GenSetReport::verified(group, gens, Method::TheoremAI, Some(n.saturating_sub(2)), search_notes(&bounds))
}

/// The cyclic reduction for torsion-free groups with cyclic holonomy of
/// order at least 3: generators of the kernel lattice as a module, plus
/// `beta`. Falls back to greedy reduction (noted) when that set does not
/// generate.
pub fn reduce_cyclic(group: &CrystalGroup, opts: ReduceOptions) -> Result<GenSetReport> {
    if !group.is_normalized() {
        return Err(Error::NotNormalized);
    }
    require_cyclic(group, 3)?;
    let verdict = is_torsion_free(group)?;
    if let Some(w) = verdict.witness {
        return Err(Error::InputNotTorsionFree(Box::new(w)));
    }
    let setup = cyclic_setup(group)?;
    let n = group.dim();
    let bound = Some(n - 1);
    let mut notes = Vec::new();
    match matrix_order(&setup.kernel_action)? {
        MatrixOrder::Finite(k) if k as usize == setup.order => {}
        other => notes.push(format!("KERNEL_ACTION_ORDER({other:?})")),
    }
    let module = GModule::cyclic(&setup.kernel_action, setup.order + 1)?;
    let bounds = rank_upper_search(&module, &default_pool(&module, opts.seed), opts.budget);
    notes.extend(search_notes(&bounds));
    let mut gens: Vec<AffineElement> = bounds.witness.iter().map(|w| setup.embed_kernel_vector(w)).collect();
    gens.push(setup.beta.clone());
    if generates(group, &gens)? {
        return GenSetReport::verified(group, gens, Method::TheoremAII, bound, notes);
    }
    notes.push(KER_F_DISCREPANCY.to_string());
    gens.push(setup.alpha.clone());
    gens.push(setup.tail_unit());
    let reduced = greedy_reduce(group, &gens)?;
    let mut notes_all = notes;
    notes_all.extend(reduced.notes.iter().cloned());
    GenSetReport::verified(group, reduced.generators, Method::Greedy, bound, notes_all)
}
