use super::{PolyError, Polynomial, Term};

/// Result of dividing `f` by an ordered list of divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division of `f` by `divisors`.
///
/// At each step the leading term of the running dividend is cancelled by
/// the first divisor (in list order) whose leading monomial divides it;
/// when none does, the term moves to the remainder. The result satisfies
/// `f = sum(q_i * g_i) + r` with no term of `r` divisible by any leading
/// monomial of the divisors.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Division, PolyError> {
    check_divisors(f, divisors)?;
    let mut quotients = vec![Polynomial::zero(f.nvars(), f.order()); divisors.len()];
    let remainder = divide(f, divisors, Some(&mut quotients))?;
    Ok(Division {
        quotients,
        remainder,
    })
}

/// Remainder of [`normal_form`] without tracking quotients.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial, PolyError> {
    check_divisors(f, divisors)?;
    divide(f, divisors, None)
}

fn check_divisors(f: &Polynomial, divisors: &[Polynomial]) -> Result<(), PolyError> {
    for g in divisors {
        f.check_compatible(g)?;
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
    }
    Ok(())
}

fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    mut quotients: Option<&mut Vec<Polynomial>>,
) -> Result<Polynomial, PolyError> {
    let mut p = f.clone();
    let mut remainder = Polynomial::zero(f.nvars(), f.order());
    while let Some(lt) = p.terms().first() {
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let glt = &g.terms()[0];
            lt.monomial
                .div(&glt.monomial)
                .map(|m| (i, &lt.coeff / &glt.coeff, m))
        });
        match hit {
            Some((i, coeff, monomial)) => {
                p = p.sub_scaled(&coeff, &monomial, &divisors[i])?;
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[i].push_smallest(Term::new(coeff, monomial));
                }
            }
            None => {
                remainder.push_smallest(lt.clone());
                p = p.tail();
            }
        }
    }
    Ok(remainder)
}
