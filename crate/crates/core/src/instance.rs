//! Problem instances `a·x + alpha <= n <= b·x - beta` and the truck
//! transport word problem that produces them.

use serde::{Deserialize, Serialize};

use crate::diophantine::{IntVec, NatVec};
use crate::error::{Error, Result};

/// The data `(a, b, alpha, beta)` of the inequality system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub alpha: u64,
    pub beta: u64,
}

impl ProblemInstance {
    pub fn new(a: Vec<u64>, b: Vec<u64>, alpha: u64, beta: u64) -> Result<Self> {
        ProblemInstance { a, b, alpha, beta }.validate()
    }

    /// Checks the dimension invariants, returning the instance unchanged.
    pub fn validate(self) -> Result<Self> {
        if self.a.len() != self.b.len() {
            return Err(Error::DimensionMismatch {
                a: self.a.len(),
                b: self.b.len(),
            });
        }
        if self.a.is_empty() {
            return Err(Error::EmptyDimension);
        }
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn has_offsets(&self) -> bool {
        self.alpha != 0 || self.beta != 0
    }

    /// The coefficient vector `b - a`.
    pub fn difference(&self) -> Result<IntVec> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(&a, &b)| {
                let a = i64::try_from(a).ok()?;
                let b = i64::try_from(b).ok()?;
                b.checked_sub(a)
            })
            .collect::<Option<Vec<_>>>()
            .map(IntVec)
            .ok_or(Error::Overflow("forming b - a"))
    }

    /// `a·x`.
    pub fn lower_form(&self, x: &NatVec) -> Result<u64> {
        x.weighted_sum(&self.a)
    }

    /// `b·x`.
    pub fn upper_form(&self, x: &NatVec) -> Result<u64> {
        x.weighted_sum(&self.b)
    }

    /// Whether `x` certifies `a·x + alpha <= n <= b·x - beta`.
    pub fn is_witness(&self, n: u64, x: &NatVec) -> bool {
        if x.len() != self.dim() {
            return false;
        }
        let lo = self
            .lower_form(x)
            .ok()
            .map(|v| v as u128 + self.alpha as u128);
        let hi = self.upper_form(x).ok().map(|v| v as u128);
        match (lo, hi) {
            (Some(lo), Some(hi)) => lo <= n as u128 && n as u128 + self.beta as u128 <= hi,
            _ => false,
        }
    }
}

/// The truck transport problem: `p` truck types with a capacity and a cost
/// each, a price per car, a minimum profit and a number of spare cars
/// loaded free of charge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransportSpec {
    pub capacities: Vec<u64>,
    pub costs: Vec<u64>,
    pub price: u64,
    pub profit: u64,
    pub spare: u64,
}

impl TransportSpec {
    /// Reduces `price·n >= costs·x + profit`, `n + spare <= capacities·x`
    /// to an instance by dividing the first inequality by the price.
    ///
    /// The price must divide every cost and the profit exactly.
    pub fn reduce(&self) -> Result<ProblemInstance> {
        if self.capacities.len() != self.costs.len() {
            return Err(Error::TransportDimensionMismatch {
                capacities: self.capacities.len(),
                costs: self.costs.len(),
            });
        }
        if self.capacities.is_empty() {
            return Err(Error::EmptyDimension);
        }
        if self.price == 0 {
            return Err(Error::NonPositive { field: "price" });
        }
        if self.capacities.contains(&0) {
            return Err(Error::NonPositive {
                field: "capacities",
            });
        }
        if self.costs.contains(&0) {
            return Err(Error::NonPositive { field: "costs" });
        }
        let a = self
            .costs
            .iter()
            .enumerate()
            .map(|(index, &cost)| {
                if cost.is_multiple_of(self.price) {
                    Ok(cost / self.price)
                } else {
                    Err(Error::IndivisibleCost {
                        index,
                        cost,
                        price: self.price,
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if !self.profit.is_multiple_of(self.price) {
            return Err(Error::IndivisibleProfit {
                profit: self.profit,
                price: self.price,
            });
        }
        ProblemInstance::new(
            a,
            self.capacities.clone(),
            self.profit / self.price,
            self.spare,
        )
    }

    /// Direct check of the unreduced conditions for a given load `x`.
    pub fn is_profitable_with(&self, n: u64, x: &[u64]) -> bool {
        let dot =
            |w: &[u64]| -> u128 { w.iter().zip(x).map(|(&w, &v)| w as u128 * v as u128).sum() };
        let revenue = self.price as u128 * n as u128;
        revenue >= dot(&self.costs) + self.profit as u128
            && n as u128 + self.spare as u128 <= dot(&self.capacities)
    }
}
