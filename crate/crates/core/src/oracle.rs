//! Exact optima for small instances.
//!
//! Two independent routes are provided. Enumeration walks every admissible
//! center set in lexicographic order. The threshold route binary-searches the
//! sorted pairwise distances and decides each radius with a covering search.
//! Both return the optimum together with a witness.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::DistanceMatrix;

/// Default cap on enumerated center sets (or search nodes for the threshold route).
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub opt_value: f64,
    /// An optimal center set, fixed centers excluded.
    pub witness: Vec<usize>,
    /// Center sets evaluated, or search nodes visited by the threshold route.
    pub work: u64,
}

/// `cost / opt`, with `0 / 0` taken as 1.
pub fn approx_factor(cost: f64, opt_value: f64) -> Result<f64> {
    if opt_value == 0.0 {
        if cost == 0.0 {
            Ok(1.0)
        } else {
            Err(Error::ZeroOptimumPositiveCost { cost })
        }
    } else {
        Ok(cost / opt_value)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// One block of the search: pick exactly `count` points from `pool`.
struct Block {
    pool: Vec<usize>,
    count: usize,
}

fn blocks_for(instance: &Instance, fair: bool, k: usize) -> Vec<Block> {
    let c0: HashSet<usize> = instance.c0().iter().copied().collect();
    let free = |p: &usize| !c0.contains(p);
    if fair {
        instance
            .quotas()
            .iter()
            .enumerate()
            .map(|(g, &count)| Block {
                pool: instance.members(g).into_iter().filter(free).collect(),
                count,
            })
            .collect()
    } else {
        vec![Block {
            pool: (0..instance.n()).filter(free).collect(),
            count: k,
        }]
    }
}

struct Enumerator<'a> {
    d: &'a DistanceMatrix,
    n: usize,
    blocks: &'a [Block],
    chosen: Vec<usize>,
    /// `nearest[depth]` holds distances to the first `depth` chosen centers and `c0`.
    nearest: Vec<Vec<f64>>,
    best: f64,
    witness: Vec<usize>,
    leaves: u64,
}

impl Enumerator<'_> {
    fn walk(&mut self, block: usize, start: usize, left: usize) {
        if left == 0 {
            if block + 1 < self.blocks.len() {
                let next = self.blocks[block + 1].count;
                self.walk(block + 1, 0, next);
            } else {
                self.leaf();
            }
            return;
        }
        let pool_len = self.blocks[block].pool.len();
        for i in start..=(pool_len - left) {
            let c = self.blocks[block].pool[i];
            let depth = self.chosen.len();
            let (head, tail) = self.nearest.split_at_mut(depth + 1);
            let (from, to) = (&head[depth], &mut tail[0]);
            for p in 0..self.n {
                to[p] = from[p].min(self.d.get(p, c));
            }
            self.chosen.push(c);
            self.walk(block, i + 1, left - 1);
            self.chosen.pop();
        }
    }

    fn leaf(&mut self) {
        self.leaves += 1;
        let row = &self.nearest[self.chosen.len()];
        let mut worst: f64 = 0.0;
        for &v in row {
            if v >= self.best {
                return;
            }
            worst = worst.max(v);
        }
        self.best = worst;
        self.witness = self.chosen.clone();
    }
}

fn enumerate(instance: &Instance, blocks: &[Block], budget: u128) -> Result<OracleResult> {
    let mut required: u128 = 1;
    for b in blocks {
        required = required.saturating_mul(binomial(b.pool.len(), b.count));
    }
    if let Some(b) = blocks.iter().find(|b| b.count > b.pool.len()) {
        return Err(Error::NotEnoughPoints {
            requested: b.count,
            available: b.pool.len(),
        });
    }
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let k: usize = blocks.iter().map(|b| b.count).sum();
    if k == 0 && instance.c0().is_empty() {
        return Err(Error::EmptyCenterSet);
    }
    let d = instance.metric().to_matrix();
    let n = instance.n();
    let mut base = vec![f64::INFINITY; n];
    for &f in instance.c0() {
        for (p, slot) in base.iter_mut().enumerate() {
            *slot = slot.min(d.get(p, f));
        }
    }
    let mut nearest = vec![base; k + 1];
    nearest.shrink_to_fit();
    let mut e = Enumerator {
        d: &d,
        n,
        blocks,
        chosen: Vec::with_capacity(k),
        nearest,
        best: f64::INFINITY,
        witness: Vec::new(),
        leaves: 0,
    };
    if blocks.is_empty() {
        e.leaf();
    } else {
        e.walk(0, 0, blocks[0].count);
    }
    Ok(OracleResult {
        opt_value: e.best,
        witness: e.witness,
        work: e.leaves,
    })
}

/// Optimum of unconstrained k-center with the instance's fixed centers.
pub fn brute_force_unfair(instance: &Instance, k: usize) -> Result<OracleResult> {
    brute_force_unfair_with_budget(instance, k, DEFAULT_BUDGET)
}

pub fn brute_force_unfair_with_budget(
    instance: &Instance,
    k: usize,
    budget: u128,
) -> Result<OracleResult> {
    enumerate(instance, &blocks_for(instance, false, k), budget)
}

/// Optimum of fair k-center by exhaustive enumeration.
pub fn brute_force_fair(instance: &Instance) -> Result<OracleResult> {
    brute_force_fair_with_budget(instance, DEFAULT_BUDGET)
}

pub fn brute_force_fair_with_budget(instance: &Instance, budget: u128) -> Result<OracleResult> {
    enumerate(instance, &blocks_for(instance, true, instance.k()), budget)
}

struct Cover<'a> {
    d: &'a DistanceMatrix,
    n: usize,
    radius: f64,
    /// Block index of each point, `usize::MAX` for points that cannot be opened.
    block_of: Vec<usize>,
    left: Vec<usize>,
    open: Vec<bool>,
    cover_count: Vec<u32>,
    chosen: Vec<usize>,
    nodes: u128,
    budget: u128,
}

impl Cover<'_> {
    fn can_open(&self, c: usize) -> bool {
        let b = self.block_of[c];
        b != usize::MAX && !self.open[c] && self.left[b] > 0
    }

    fn set(&mut self, c: usize, on: bool) {
        self.open[c] = on;
        let b = self.block_of[c];
        if on {
            self.left[b] -= 1;
            self.chosen.push(c);
        } else {
            self.left[b] += 1;
            self.chosen.pop();
        }
        for p in 0..self.n {
            if self.d.get(p, c) <= self.radius {
                if on {
                    self.cover_count[p] += 1;
                } else {
                    self.cover_count[p] -= 1;
                }
            }
        }
    }

    /// Depth-first search branching on the uncovered point with the fewest options.
    fn search(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                required: self.nodes,
                budget: self.budget,
            });
        }
        let mut target: Option<(usize, usize)> = None;
        for p in (0..self.n).filter(|&p| self.cover_count[p] == 0) {
            let options = (0..self.n)
                .filter(|&c| self.can_open(c) && self.d.get(p, c) <= self.radius)
                .count();
            if options == 0 {
                return Ok(false);
            }
            if target.map_or(true, |(_, best)| options < best) {
                target = Some((p, options));
            }
        }
        let Some((p, _)) = target else {
            return Ok(true);
        };
        for c in 0..self.n {
            if self.can_open(c) && self.d.get(p, c) <= self.radius {
                self.set(c, true);
                if self.search()? {
                    return Ok(true);
                }
                self.set(c, false);
            }
        }
        Ok(false)
    }
}

fn threshold(instance: &Instance, blocks: &[Block], budget: u128) -> Result<OracleResult> {
    if let Some(b) = blocks.iter().find(|b| b.count > b.pool.len()) {
        return Err(Error::NotEnoughPoints {
            requested: b.count,
            available: b.pool.len(),
        });
    }
    let k: usize = blocks.iter().map(|b| b.count).sum();
    if k == 0 && instance.c0().is_empty() {
        return Err(Error::EmptyCenterSet);
    }
    let d = instance.metric().to_matrix();
    let n = instance.n();
    let mut radii: Vec<f64> = vec![0.0];
    for i in 0..n {
        for j in (i + 1)..n {
            radii.push(d.get(i, j));
        }
    }
    radii.sort_by(f64::total_cmp);
    radii.dedup();

    let mut block_of = vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        for &p in &block.pool {
            block_of[p] = b;
        }
    }
    let mut total_nodes: u128 = 0;
    let mut decide = |radius: f64| -> Result<Option<Vec<usize>>> {
        let mut cover = Cover {
            d: &d,
            n,
            radius,
            block_of: block_of.clone(),
            left: blocks.iter().map(|b| b.count).collect(),
            open: vec![false; n],
            cover_count: vec![0; n],
            chosen: Vec::new(),
            nodes: 0,
            budget: budget.saturating_sub(total_nodes),
        };
        for &f in instance.c0() {
            for p in 0..n {
                if d.get(p, f) <= radius {
                    cover.cover_count[p] += 1;
                }
            }
        }
        let found = cover.search()?;
        total_nodes += cover.nodes;
        if !found {
            return Ok(None);
        }
        // Unused quota is filled with the lowest free indices; more centers never hurt.
        let mut witness = cover.chosen.clone();
        for (b, block) in blocks.iter().enumerate() {
            let mut need = cover.left[b];
            for &p in &block.pool {
                if need == 0 {
                    break;
                }
                if !cover.open[p] {
                    witness.push(p);
                    need -= 1;
                }
            }
        }
        Ok(Some(witness))
    };

    let (mut lo, mut hi) = (0usize, radii.len() - 1);
    let mut witness = decide(radii[hi])?.expect("the largest distance covers everything");
    while lo < hi {
        let mid = (lo + hi) / 2;
        match decide(radii[mid])? {
            Some(w) => {
                hi = mid;
                witness = w;
            }
            None => lo = mid + 1,
        }
    }
    Ok(OracleResult {
        opt_value: radii[hi],
        witness,
        work: u64::try_from(total_nodes).unwrap_or(u64::MAX),
    })
}

/// Optimum of fair k-center by radius search. Handles instances far beyond
/// the reach of enumeration when clusters are well separated.
pub fn threshold_fair(instance: &Instance) -> Result<OracleResult> {
    threshold_fair_with_budget(instance, DEFAULT_BUDGET)
}

pub fn threshold_fair_with_budget(instance: &Instance, budget: u128) -> Result<OracleResult> {
    threshold(instance, &blocks_for(instance, true, instance.k()), budget)
}

/// Unconstrained counterpart of [`threshold_fair`].
pub fn threshold_unfair(instance: &Instance, k: usize) -> Result<OracleResult> {
    threshold(instance, &blocks_for(instance, false, k), DEFAULT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::solution_cost;
    use crate::metric::Metric;

    fn line(xs: &[f64], groups: Vec<usize>, quotas: Vec<usize>, c0: Vec<usize>) -> Instance {
        let m: Metric = DistanceMatrix::from_fn(xs.len(), |i, j| (xs[i] - xs[j]).abs())
            .unwrap()
            .into();
        Instance::new(m, groups, quotas, c0).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(25, 8), 1_081_575);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn fair_optimum_on_a_line() {
        // Fairness forces one center into the far-away group 1 pair.
        let inst = line(
            &[0.0, 1.0, 2.0, 10.0, 11.0],
            vec![0, 0, 0, 1, 1],
            vec![1, 1],
            vec![],
        );
        let r = brute_force_fair(&inst).unwrap();
        assert_eq!(r.opt_value, 1.0);
        assert_eq!(r.witness, vec![1, 3]);
        assert_eq!(r.work, 6);
        assert_eq!(threshold_fair(&inst).unwrap().opt_value, 1.0);
    }

    #[test]
    fn fairness_can_cost_more() {
        let inst = line(
            &[0.0, 1.0, 10.0, 11.0],
            vec![0, 0, 0, 1],
            vec![2, 0],
            vec![],
        );
        let unfair = brute_force_unfair(&inst, 2).unwrap();
        assert_eq!(unfair.opt_value, 1.0);
        let fair = inst.with_quotas(vec![1, 1]).unwrap();
        assert_eq!(brute_force_fair(&fair).unwrap().opt_value, 1.0);
        let skewed = line(
            &[0.0, 1.0, 10.0, 11.0],
            vec![0, 0, 1, 1],
            vec![2, 0],
            vec![],
        );
        assert_eq!(brute_force_fair(&skewed).unwrap().opt_value, 10.0);
        assert_eq!(threshold_fair(&skewed).unwrap().opt_value, 10.0);
    }

    #[test]
    fn fixed_centers_count_towards_coverage() {
        let inst = line(&[0.0, 5.0, 10.0], vec![0, 0, 0], vec![1], vec![2]);
        let r = brute_force_fair(&inst).unwrap();
        assert_eq!(r.opt_value, 5.0);
        assert_eq!(solution_cost(&inst, &r.witness).unwrap(), 5.0);
    }

    #[test]
    fn zero_k_needs_fixed_centers() {
        let inst = line(&[0.0, 5.0], vec![0, 0], vec![0], vec![]);
        assert!(matches!(
            brute_force_fair(&inst),
            Err(Error::EmptyCenterSet)
        ));
        let inst = line(&[0.0, 5.0], vec![0, 0], vec![0], vec![0]);
        assert_eq!(brute_force_fair(&inst).unwrap().opt_value, 5.0);
    }

    #[test]
    fn budget_is_enforced() {
        let xs: Vec<f64> = (0..30).map(f64::from).collect();
        let inst = line(&xs, vec![0; 30], vec![10], vec![]);
        let err = brute_force_fair_with_budget(&inst, 1000).unwrap_err();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                required: 30045015,
                budget: 1000
            }
        ));
    }

    #[test]
    fn factor_conventions() {
        assert_eq!(approx_factor(3.0, 1.5).unwrap(), 2.0);
        assert_eq!(approx_factor(0.0, 0.0).unwrap(), 1.0);
        assert!(matches!(
            approx_factor(1.0, 0.0),
            Err(Error::ZeroOptimumPositiveCost { .. })
        ));
    }
}
