use std::fmt;

/// A non-negative angular momentum `j`, stored as the integer `2j`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl serde::Serialize for HalfInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    #[inline]
    pub const fn from_twice(twice: u32) -> Self {
        HalfInt(twice)
    }

    #[inline]
    pub const fn from_int(j: u32) -> Self {
        HalfInt(2 * j)
    }

    /// The spin of `copies` qubits in the totally symmetric subspace, `copies / 2`.
    #[inline]
    pub const fn spin_of(copies: u32) -> Self {
        HalfInt(copies)
    }

    #[inline]
    pub const fn twice(self) -> u32 {
        self.0
    }

    /// `2j + 1`.
    #[inline]
    pub const fn dim(self) -> u32 {
        self.0 + 1
    }

    #[inline]
    pub const fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// `j (j + 1)`.
    #[inline]
    pub fn casimir(self) -> f64 {
        let j = self.to_f64();
        j * (j + 1.0)
    }

    pub fn checked_sub(self, other: HalfInt) -> Option<HalfInt> {
        self.0.checked_sub(other.0).map(HalfInt)
    }

    /// All `j` in `self ⊗ other`: `|j1 - j2|, …, j1 + j2`.
    pub fn coupled_with(self, other: HalfInt) -> impl DoubleEndedIterator<Item = HalfInt> {
        let lo = self.0.abs_diff(other.0);
        let hi = self.0 + other.0;
        (0..=(hi - lo) / 2).map(move |k| HalfInt(lo + 2 * k))
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Triangle and parity condition for a coupling triad `(j1, j2, j3)`.
#[inline]
pub fn triangle(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool {
    let (a, b, c) = (j1.0, j2.0, j3.0);
    a.abs_diff(b) <= c && c <= a + b && (a + b + c) % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_dim() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
        assert_eq!(HalfInt::from_twice(3).dim(), 4);
    }

    #[test]
    fn triangle_rules() {
        let h = HalfInt::from_twice;
        assert!(triangle(h(1), h(1), h(2)));
        assert!(triangle(h(1), h(1), h(0)));
        assert!(!triangle(h(1), h(1), h(1)));
        assert!(!triangle(h(2), h(2), h(6)));
    }

    #[test]
    fn coupling_series() {
        let js: Vec<u32> = HalfInt::from_twice(3)
            .coupled_with(HalfInt::from_twice(2))
            .map(HalfInt::twice)
            .collect();
        assert_eq!(js, vec![1, 3, 5]);
    }
}
