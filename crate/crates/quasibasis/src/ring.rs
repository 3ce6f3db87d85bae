//! Elements of the coefficient ring `R = K^Ω`.
//!
//! A [`RingElem`] is a function from atoms to an exact field `K`, stored as
//! one value per atom. Addition and multiplication are pointwise; the ring
//! has zero divisors, so instead of true inverses every element carries a
//! support idempotent and a generalized inverse.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::space::{AtomSpace, Idempotent};

/// A ring element of `K^Ω`: one field value per atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElem<F: Field = Rational> {
    values: Vec<F>,
    space: AtomSpace,
}

impl<F: Field> RingElem<F> {
    /// Wrap a value vector; its length must equal the atom count.
    pub fn new(space: &AtomSpace, values: Vec<F>) -> Result<Self> {
        if values.len() != space.atom_count() {
            return Err(Error::InvalidValue(format!(
                "{} values given for {} atoms",
                values.len(),
                space.atom_count()
            )));
        }
        Ok(Self::new_unchecked(space, values))
    }

    pub(crate) fn new_unchecked(space: &AtomSpace, values: Vec<F>) -> Self {
        debug_assert_eq!(values.len(), space.atom_count());
        RingElem {
            values,
            space: space.clone(),
        }
    }

    /// The zero element.
    pub fn zero(space: &AtomSpace) -> Self {
        Self::new_unchecked(space, vec![F::zero(); space.atom_count()])
    }

    /// The ring identity `e` (constant one).
    pub fn identity(space: &AtomSpace) -> Self {
        Self::new_unchecked(space, vec![F::one(); space.atom_count()])
    }

    pub fn space(&self) -> &AtomSpace {
        &self.space
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    /// The value at one atom.
    pub fn value_at(&self, atom: usize) -> Result<&F> {
        self.space.check_atom(atom)?;
        Ok(&self.values[atom])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.space.check_same(&other.space)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self::new_unchecked(&self.space, values))
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.space.check_same(&other.space)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Self::new_unchecked(&self.space, values))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.space.check_same(&other.space)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(Self::new_unchecked(&self.space, values))
    }

    /// Pointwise negation.
    pub fn neg(&self) -> Self {
        let values = self.values.iter().map(|a| a.neg()).collect();
        Self::new_unchecked(&self.space, values)
    }

    /// The support idempotent `i_a`: the least idempotent `i` with `i·a = a`,
    /// i.e. the indicator of the atoms where the value is nonzero.
    pub fn support(&self) -> Idempotent {
        let atoms = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(atom, _)| atom);
        Idempotent::new(&self.space, atoms).expect("support atoms are in range")
    }

    /// The generalized inverse: pointwise reciprocal on the support, zero
    /// elsewhere. Satisfies `a⁻¹·a = i_a`, `i_{a⁻¹} = i_a` and `(a⁻¹)⁻¹ = a`.
    pub fn gen_inverse(&self) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| v.inv().unwrap_or_else(F::zero))
            .collect();
        Self::new_unchecked(&self.space, values)
    }

    /// Zero the element outside the given idempotent.
    pub fn restrict(&self, idem: &Idempotent) -> Result<Self> {
        self.space.check_same(idem.space())?;
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(atom, v)| {
                if idem.contains(atom) {
                    v.clone()
                } else {
                    F::zero()
                }
            })
            .collect();
        Ok(Self::new_unchecked(&self.space, values))
    }

    /// Interpret as an idempotent; errors unless every value is 0 or 1.
    pub fn to_idempotent(&self) -> Result<Idempotent> {
        for (atom, v) in self.values.iter().enumerate() {
            if !v.is_zero() && *v != F::one() {
                return Err(Error::InvalidValue(format!(
                    "value {v} at atom {atom} does not satisfy a² = a"
                )));
            }
        }
        Ok(self.support())
    }
}

impl<F: Field> fmt::Display for RingElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (atom, v) in self.values.iter().enumerate() {
            if atom > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, ratio};

    fn elem(space: &AtomSpace, values: &[i64]) -> RingElem {
        RingElem::new(space, values.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn pointwise_arithmetic() {
        let s = AtomSpace::new(2).unwrap();
        let a = elem(&s, &[1, 2]);
        let b = elem(&s, &[3, -2]);
        assert_eq!(a.add(&b).unwrap(), elem(&s, &[4, 0]));

        // zero divisors: (2,0)·(0,5) = 0 although neither factor is zero
        let c = elem(&s, &[2, 0]);
        let d = elem(&s, &[0, 5]);
        assert_eq!(c.mul(&d).unwrap(), RingElem::zero(&s));

        let e = RingElem::identity(&s);
        assert_eq!(e.mul(&a).unwrap(), a);
    }

    #[test]
    fn support_is_nonzero_locus() {
        let s = AtomSpace::new(3).unwrap();
        let a = elem(&s, &[2, 0, -3]);
        assert_eq!(a.support(), Idempotent::new(&s, [0, 2]).unwrap());
        assert_eq!(
            RingElem::<Rational>::zero(&s).support(),
            Idempotent::zero(&s)
        );
        // support is the least i with i·a = a
        let i = a.support();
        assert_eq!(i.indicator::<Rational>().mul(&a).unwrap(), a);
    }

    #[test]
    fn support_of_product_meets() {
        let s = AtomSpace::new(2).unwrap();
        let a = elem(&s, &[2, 0]);
        let b = elem(&s, &[0, 5]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.support(), a.support().meet(&b.support()).unwrap());
        assert!(prod.support().is_zero());
    }

    #[test]
    fn gen_inverse_formula() {
        let s = AtomSpace::new(3).unwrap();
        let a = RingElem::new(&s, vec![int(2), int(0), int(-3)]).unwrap();
        let inv = a.gen_inverse();
        assert_eq!(
            inv,
            RingElem::new(&s, vec![ratio(1, 2), int(0), ratio(-1, 3)]).unwrap()
        );
        assert_eq!(inv.mul(&a).unwrap(), a.support().indicator());
        assert_eq!(inv.support(), a.support());
        assert_eq!(inv.gen_inverse(), a);

        let zero = RingElem::<Rational>::zero(&s);
        assert_eq!(zero.gen_inverse(), zero);

        let e = RingElem::<Rational>::identity(&s);
        assert_eq!(e.gen_inverse(), e);
        assert_eq!(e.gen_inverse().mul(&e).unwrap(), e);
    }

    #[test]
    fn gen_inverse_of_idempotent_is_itself() {
        let s = AtomSpace::new(3).unwrap();
        let i = Idempotent::new(&s, [0, 2]).unwrap().indicator::<Rational>();
        assert_eq!(i.gen_inverse(), i);
    }

    #[test]
    fn idempotent_conversion_round_trip() {
        let s = AtomSpace::new(3).unwrap();
        let i = Idempotent::new(&s, [1, 2]).unwrap();
        assert_eq!(i.indicator::<Rational>().to_idempotent().unwrap(), i);
        let not_idem = elem(&s, &[2, 0, 0]);
        assert!(not_idem.to_idempotent().is_err());
    }

    #[test]
    fn length_mismatch_rejected() {
        let s = AtomSpace::new(3).unwrap();
        assert!(RingElem::new(&s, vec![int(1)]).is_err());
    }
}
