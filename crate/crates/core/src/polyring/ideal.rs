use super::{MonomialOrder, PolyError, Polynomial, MAX_VARIABLES};

/// A finite generating set. Zero generators are dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(
        nvars: usize,
        order: MonomialOrder,
        generators: Vec<Polynomial>,
    ) -> Result<Self, PolyError> {
        if nvars > MAX_VARIABLES {
            return Err(PolyError::TooManyVariables { nvars });
        }
        for g in &generators {
            if g.nvars() != nvars {
                return Err(PolyError::DimensionMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            if g.order() != order {
                return Err(PolyError::OrderMismatch {
                    left: order,
                    right: g.order(),
                });
            }
        }
        Ok(Ideal {
            nvars,
            order,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Adds one more generator (ignored if zero).
    pub fn adjoin(&mut self, g: Polynomial) -> Result<(), PolyError> {
        if g.nvars() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: g.nvars(),
            });
        }
        if g.order() != self.order {
            return Err(PolyError::OrderMismatch {
                left: self.order,
                right: g.order(),
            });
        }
        if !g.is_zero() {
            self.generators.push(g);
        }
        Ok(())
    }

    /// The same generators re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            nvars: self.nvars,
            order,
            generators: self
                .generators
                .iter()
                .map(|g| g.with_order(order))
                .collect(),
        }
    }
}
