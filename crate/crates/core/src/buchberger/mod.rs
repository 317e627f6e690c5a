//! Buchberger's completion algorithm and reduced Gröbner bases.

mod pairs;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{
    normal_form, reduce, Ideal, MonomialOrder, PolyError, PolySystem, Polynomial, RingHeader,
};

use pairs::PairQueue;
pub use pairs::SelectionStrategy;

/// Pair-pruning criteria. Both are sound: disabling them changes the work
/// done but never the reduced basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Criteria {
    /// Skip pairs whose leading monomials share no variable.
    pub coprime: bool,
    /// Skip `(i, j)` when some `g_l` has a leading monomial dividing
    /// `lcm(i, j)` and neither `(i, l)` nor `(j, l)` is still pending.
    pub chain: bool,
}

impl Criteria {
    pub const ALL: Criteria = Criteria {
        coprime: true,
        chain: true,
    };
    pub const NONE: Criteria = Criteria {
        coprime: false,
        chain: false,
    };
}

impl Default for Criteria {
    fn default() -> Self {
        Criteria::ALL
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerConfig {
    pub criteria: Criteria,
    pub strategy: SelectionStrategy,
    /// Maximum number of S-polynomial reductions; `None` is unlimited.
    pub budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Pairs taken off the queue, including those pruned by a criterion.
    pub pairs: u64,
    /// S-polynomials actually formed and reduced.
    pub reductions: u64,
    pub coprime_skips: u64,
    pub chain_skips: u64,
    /// Elements in the (unreduced) basis when the run stopped.
    pub basis_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuchbergerError {
    #[error("step budget of {budget} reductions exhausted")]
    BudgetExhausted { budget: u64, stats: Stats },
    #[error("{source}")]
    Poly { source: PolyError, stats: Stats },
}

impl BuchbergerError {
    pub fn stats(&self) -> &Stats {
        match self {
            BuchbergerError::BudgetExhausted { stats, .. }
            | BuchbergerError::Poly { stats, .. } => stats,
        }
    }
}

/// A Gröbner basis together with the ring it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps polynomials claimed to form a basis, e.g. one read from disk.
    /// Nothing is checked; use [`is_groebner`] to validate.
    pub fn from_polys(nvars: usize, order: MonomialOrder, polys: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            nvars,
            order,
            polys,
            reduced: false,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True iff the basis is exactly `{1}`.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_one()
    }

    /// Remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        reduce(f, &self.polys)
    }

    /// Ideal membership test; exact when `self` is a Gröbner basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_system(&self, mode: Option<String>) -> PolySystem {
        PolySystem {
            header: RingHeader {
                nvars: self.nvars,
                order: self.order,
                mode,
            },
            polys: self.polys.clone(),
        }
    }
}

/// `(lcm / LT(f)) * f - (lcm / LT(g)) * g` for the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    f.check_compatible(g)?;
    let ft = f.leading_term()?;
    let gt = g.leading_term()?;
    let lcm = ft.monomial.lcm(&gt.monomial)?;
    let fm = lcm.div(&ft.monomial).expect("lcm is a multiple");
    let gm = lcm.div(&gt.monomial).expect("lcm is a multiple");
    let left = f.mul_term(&ft.coeff.recip(), &fm)?;
    left.sub_scaled(&gt.coeff.recip(), &gm, g)
}

/// Completes the generators of `ideal` to a Gröbner basis.
///
/// S-polynomial remainders are made monic before insertion. The run stops
/// early once a nonzero constant enters the basis, since any set
/// containing a unit is a Gröbner basis of the unit ideal.
pub fn buchberger(
    ideal: &Ideal,
    config: &BuchbergerConfig,
) -> Result<(GroebnerBasis, Stats), BuchbergerError> {
    let order = ideal.order();
    let nvars = ideal.nvars();
    let mut stats = Stats::default();
    let unit = |mut stats: Stats| {
        stats.basis_size = 1;
        (
            GroebnerBasis::from_polys(nvars, order, vec![Polynomial::one(nvars, order)]),
            stats,
        )
    };

    let mut basis: Vec<Polynomial> = ideal.generators().iter().map(Polynomial::monic).collect();
    if basis.iter().any(Polynomial::is_constant) {
        return Ok(unit(stats));
    }

    let mut queue = PairQueue::new(config.strategy);
    let lcm_of = |a: &Polynomial, b: &Polynomial| {
        a.leading_monomial()
            .unwrap()
            .lcm(b.leading_monomial().unwrap())
    };
    let poly_err = |source, stats: &Stats| BuchbergerError::Poly {
        source,
        stats: *stats,
    };
    for j in 0..basis.len() {
        for i in 0..j {
            let lcm = lcm_of(&basis[i], &basis[j]).map_err(|e| poly_err(e, &stats))?;
            queue.push(i, j, lcm);
        }
    }

    while let Some(pair) = queue.pop(order) {
        stats.pairs += 1;
        let lm_i = basis[pair.i].leading_monomial().unwrap();
        let lm_j = basis[pair.j].leading_monomial().unwrap();
        if config.criteria.coprime && lm_i.is_coprime(lm_j) {
            stats.coprime_skips += 1;
            continue;
        }
        if config.criteria.chain
            && (0..basis.len()).any(|l| {
                l != pair.i
                    && l != pair.j
                    && !queue.contains(pair.i, l)
                    && !queue.contains(pair.j, l)
                    && basis[l].leading_monomial().unwrap().divides(&pair.lcm)
            })
        {
            stats.chain_skips += 1;
            continue;
        }
        if let Some(budget) = config.budget {
            if stats.reductions >= budget {
                stats.basis_size = basis.len();
                return Err(BuchbergerError::BudgetExhausted { budget, stats });
            }
        }
        stats.reductions += 1;
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]).map_err(|e| poly_err(e, &stats))?;
        let r = reduce(&s, &basis).map_err(|e| poly_err(e, &stats))?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit(stats));
        }
        let r = r.monic();
        let new = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = lcm_of(g, &r).map_err(|e| poly_err(e, &stats))?;
            queue.push(i, new, lcm);
        }
        basis.push(r);
    }

    stats.basis_size = basis.len();
    Ok((GroebnerBasis::from_polys(nvars, order, basis), stats))
}

/// Turns a Gröbner basis into the unique reduced one: monic, no element's
/// terms divisible by another's leading monomial, sorted by leading
/// monomial in descending order.
pub fn reduce_basis(basis: &GroebnerBasis) -> Result<GroebnerBasis, PolyError> {
    let order = basis.order();
    let mut polys: Vec<Polynomial> = basis
        .polys()
        .iter()
        .filter(|p| !p.is_zero())
        .map(Polynomial::monic)
        .collect();
    polys.sort_by(|a, b| {
        order.cmp_same_ring(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });

    // A divisor's leading monomial is never larger, so scanning upwards
    // keeps exactly the elements with minimal leading monomials.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(p);
        }
    }

    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, p) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, q)| q.clone())
            .collect();
        reduced.push(reduce(p, &others)?.monic());
    }
    reduced.sort_by(|a, b| {
        order
            .cmp_same_ring(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .reverse()
    });
    Ok(GroebnerBasis {
        nvars: basis.nvars(),
        order,
        polys: reduced,
        reduced: true,
    })
}

/// Buchberger followed by [`reduce_basis`].
pub fn groebner_basis(
    ideal: &Ideal,
    config: &BuchbergerConfig,
) -> Result<(GroebnerBasis, Stats), BuchbergerError> {
    let (basis, stats) = buchberger(ideal, config)?;
    let reduced = reduce_basis(&basis).map_err(|source| BuchbergerError::Poly { source, stats })?;
    Ok((reduced, stats))
}

/// Buchberger's criterion: every pairwise S-polynomial reduces to zero.
/// Zero entries are ignored.
pub fn is_groebner(polys: &[Polynomial]) -> Result<bool, PolyError> {
    let owned: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    for j in 0..owned.len() {
        for i in 0..j {
            let s = s_polynomial(&owned[i], &owned[j])?;
            if !reduce(&s, &owned)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every generator of `ideal` has remainder zero modulo `basis`.
pub fn generates_ideal(basis: &GroebnerBasis, ideal: &Ideal) -> Result<bool, PolyError> {
    for g in ideal.generators() {
        if !basis.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Division identity check used by tests and the certificate verifier:
/// `f == sum(q_i * g_i) + r`.
pub fn division_identity_holds(f: &Polynomial, divisors: &[Polynomial]) -> Result<bool, PolyError> {
    let d = normal_form(f, divisors)?;
    let mut acc = d.remainder.clone();
    for (q, g) in d.quotients.iter().zip(divisors) {
        acc = acc.add(&q.mul(g)?)?;
    }
    Ok(acc == *f)
}
