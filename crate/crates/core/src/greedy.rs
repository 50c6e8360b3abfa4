//! Farthest-first traversal (Gonzalez) with optional pre-existing centers.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clustering::clustering_cost;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::Metric;

/// How ties and "arbitrary" choices are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Lowest point index wins every tie and every free choice.
    #[default]
    Deterministic,
    /// Ties and free choices are drawn from a ChaCha8 stream.
    SeededRandom,
}

/// Source of tie-breaking decisions.
#[derive(Debug, Clone)]
pub struct Chooser {
    rng: Option<ChaCha8Rng>,
}

impl Chooser {
    pub fn deterministic() -> Self {
        Self { rng: None }
    }

    pub fn seeded(seed: u64) -> Self {
        Self {
            rng: Some(ChaCha8Rng::seed_from_u64(seed)),
        }
    }

    pub fn new(mode: Mode, seed: u64) -> Self {
        match mode {
            Mode::Deterministic => Self::deterministic(),
            Mode::SeededRandom => Self::seeded(seed),
        }
    }

    pub fn is_random(&self) -> bool {
        self.rng.is_some()
    }

    /// Decides whether a candidate tied with the incumbent replaces it.
    ///
    /// `ties` counts the tied candidates seen so far including this one, which
    /// makes the random variant a uniform reservoir draw.
    fn take_tie(&mut self, candidate: usize, incumbent: usize, ties: u64) -> bool {
        match &mut self.rng {
            None => candidate < incumbent,
            Some(rng) => rng.gen_range(0..ties) == 0,
        }
    }

    /// Picks `count` distinct elements of `pool`.
    ///
    /// Deterministic mode takes the smallest indices. The result is sorted.
    pub fn choose_many(&mut self, pool: &[usize], count: usize) -> Result<Vec<usize>> {
        if count > pool.len() {
            return Err(Error::NotEnoughPoints {
                requested: count,
                available: pool.len(),
            });
        }
        let mut pool = pool.to_vec();
        pool.sort_unstable();
        let mut picked = match &mut self.rng {
            None => pool[..count].to_vec(),
            Some(rng) => sample(rng, pool.len(), count)
                .into_iter()
                .map(|i| pool[i])
                .collect(),
        };
        picked.sort_unstable();
        Ok(picked)
    }
}

/// Centers picked by [`greedy_k_center`] and the distance at which each was picked.
///
/// `radii[i]` is the distance from `chosen[i]` to the closest center present
/// before it was chosen, or `+inf` when there was none.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GreedyTrace {
    pub chosen: Vec<usize>,
    pub radii: Vec<f64>,
}

/// Incremental farthest-point state over a list of points.
pub(crate) struct Farthest<'a> {
    metric: &'a Metric,
    points: &'a [usize],
    nearest: Vec<f64>,
    blocked: Vec<bool>,
}

impl<'a> Farthest<'a> {
    /// Starts with every point of `fixed` acting as a center.
    pub(crate) fn new(metric: &'a Metric, points: &'a [usize], fixed: &[usize]) -> Self {
        let fixed_set: HashSet<usize> = fixed.iter().copied().collect();
        let mut state = Self {
            metric,
            points,
            nearest: vec![f64::INFINITY; points.len()],
            blocked: points.iter().map(|p| fixed_set.contains(p)).collect(),
        };
        for &f in fixed {
            state.relax(f);
        }
        state
    }

    fn relax(&mut self, center: usize) {
        for (slot, &p) in self.nearest.iter_mut().zip(self.points) {
            let d = self.metric.dist(center, p);
            if d < *slot {
                *slot = d;
            }
        }
    }

    /// Opens the point at position `pos` as a center.
    pub(crate) fn open(&mut self, pos: usize) {
        self.blocked[pos] = true;
        self.relax(self.points[pos]);
    }

    /// Farthest eligible point, as `(position, distance)`.
    pub(crate) fn pick(
        &self,
        chooser: &mut Chooser,
        eligible: impl Fn(usize) -> bool,
    ) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        let mut ties = 0u64;
        for (pos, &p) in self.points.iter().enumerate() {
            if self.blocked[pos] || !eligible(p) {
                continue;
            }
            let d = self.nearest[pos];
            match best {
                None => {
                    best = Some((pos, d));
                    ties = 1;
                }
                Some((b, bd)) => {
                    if d > bd {
                        best = Some((pos, d));
                        ties = 1;
                    } else if d == bd {
                        ties += 1;
                        if chooser.take_tie(p, self.points[b], ties) {
                            best = Some((pos, d));
                        }
                    }
                }
            }
        }
        best
    }

    pub(crate) fn point(&self, pos: usize) -> usize {
        self.points[pos]
    }
}

/// Picks `k` centers from `points` by repeatedly taking the point farthest
/// from all current centers.
///
/// Points in `fixed` act as centers from the start and are never picked;
/// they need not belong to `points`. Ties follow `chooser`.
pub fn greedy_k_center(
    metric: &Metric,
    points: &[usize],
    k: usize,
    fixed: &[usize],
    chooser: &mut Chooser,
) -> Result<GreedyTrace> {
    let mut state = Farthest::new(metric, points, fixed);
    let available = state.blocked.iter().filter(|b| !**b).count();
    if k > available {
        return Err(Error::NotEnoughPoints {
            requested: k,
            available,
        });
    }
    let mut trace = GreedyTrace {
        chosen: Vec::with_capacity(k),
        radii: Vec::with_capacity(k),
    };
    for _ in 0..k {
        let (pos, radius) = state
            .pick(chooser, |_| true)
            .expect("availability was checked up front");
        trace.chosen.push(state.point(pos));
        trace.radii.push(radius);
        state.open(pos);
    }
    Ok(trace)
}

/// Whether a greedy run over the whole instance stays within twice `opt_value`.
///
/// The run is assumed to have used the instance's fixed centers.
pub fn two_approx_check(instance: &Instance, trace: &GreedyTrace, opt_value: f64) -> Result<bool> {
    let cost = clustering_cost(instance, &trace.chosen, instance.c0())?;
    Ok(cost <= 2.0 * opt_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::DistanceMatrix;

    fn line(xs: &[f64]) -> Metric {
        DistanceMatrix::from_fn(xs.len(), |i, j| (xs[i] - xs[j]).abs())
            .unwrap()
            .into()
    }

    #[test]
    fn deterministic_run_on_a_line() {
        let m = line(&[0.0, 1.0, 5.0, 6.0, 10.0]);
        let trace =
            greedy_k_center(&m, &[0, 1, 2, 3, 4], 3, &[], &mut Chooser::deterministic()).unwrap();
        assert_eq!(trace.chosen, vec![0, 4, 2]);
        assert_eq!(trace.radii, vec![f64::INFINITY, 10.0, 5.0]);
    }

    #[test]
    fn fixed_centers_shape_the_first_pick() {
        let m = line(&[0.0, 1.0, 5.0, 6.0, 10.0]);
        let trace =
            greedy_k_center(&m, &[0, 1, 2, 3, 4], 1, &[4], &mut Chooser::deterministic()).unwrap();
        assert_eq!(trace.chosen, vec![0]);
        assert_eq!(trace.radii, vec![10.0]);
    }

    #[test]
    fn fixed_centers_are_never_picked() {
        let m = line(&[0.0, 0.0, 0.0]);
        let trace =
            greedy_k_center(&m, &[0, 1, 2], 2, &[0], &mut Chooser::deterministic()).unwrap();
        assert_eq!(trace.chosen, vec![1, 2]);
    }

    #[test]
    fn too_many_centers_is_an_error() {
        let m = line(&[0.0, 1.0]);
        let err = greedy_k_center(&m, &[0, 1], 2, &[1], &mut Chooser::deterministic()).unwrap_err();
        assert!(matches!(
            err,
            Error::NotEnoughPoints {
                requested: 2,
                available: 1
            }
        ));
    }

    #[test]
    fn seeded_runs_repeat() {
        let m = line(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        let pts: Vec<usize> = (0..6).collect();
        let a = greedy_k_center(&m, &pts, 3, &[], &mut Chooser::seeded(9)).unwrap();
        let b = greedy_k_center(&m, &pts, 3, &[], &mut Chooser::seeded(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_first_pick_covers_every_point() {
        let m = line(&[0.0, 1.0, 2.0, 3.0]);
        let pts: Vec<usize> = (0..4).collect();
        let mut seen = [false; 4];
        for seed in 0..200 {
            let t = greedy_k_center(&m, &pts, 1, &[], &mut Chooser::seeded(seed)).unwrap();
            seen[t.chosen[0]] = true;
        }
        assert!(seen.iter().all(|s| *s));
    }

    #[test]
    fn choose_many_is_lowest_first_when_deterministic() {
        let mut c = Chooser::deterministic();
        assert_eq!(c.choose_many(&[9, 3, 5, 1], 2).unwrap(), vec![1, 3]);
        assert!(c.choose_many(&[1], 2).is_err());
        let mut r = Chooser::seeded(1);
        let got = r.choose_many(&[9, 3, 5, 1], 3).unwrap();
        assert_eq!(got.len(), 3);
        assert!(got.iter().all(|g| [9, 3, 5, 1].contains(g)));
    }
}
