//! n-qubit Pauli observables and their symplectic encoding.
//!
//! A coordinate vector `(a₁, b₁, …, aₙ, bₙ)` over GF(2) names the canonical
//! observable `O₁ ⊗ … ⊗ Oₙ` with `Oᵢ = Y` when `aᵢ = bᵢ = 1` and
//! `Oᵢ = Z^{aᵢ} X^{bᵢ}` otherwise. An observable carries this vector plus a
//! global phase `i^k`.
//!
//! Phase bookkeeping uses `Y = i·X·Z`, so `Z·X = i·Y` and, with `L(a, b)` the
//! canonical letter, `Z^a X^b = i^{ab} L(a, b)`. Multiplying two letters then
//! gives `L(a,b)·L(c,d) = i^{(a⊕c)(b⊕d) − ab − cd + 2bc} L(a⊕c, b⊕d)`.

use std::fmt;
use std::str::FromStr;

use crate::gf2::Gf2Vector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PauliError {
    #[error("the identity operator is not an observable point")]
    TrivialOperator,
    #[error("coordinate vector has odd length {0}")]
    OddLength(usize),
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),
    #[error("invalid Pauli string {0:?}")]
    Parse(String),
    #[error("product of an empty list of factors")]
    EmptyProduct,
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// The letter for symplectic coordinates `(a, b)`.
    pub fn from_coords(a: bool, b: bool) -> Self {
        match (a, b) {
            (false, false) => Letter::I,
            (true, false) => Letter::Z,
            (false, true) => Letter::X,
            (true, true) => Letter::Y,
        }
    }

    pub fn coords(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::Z => (true, false),
            Letter::X => (false, true),
            Letter::Y => (true, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// Phase exponent `k` (mod 4) picked up by `L(a,b)·L(c,d)`.
#[inline]
fn letter_product_phase(a: u8, b: u8, c: u8, d: u8) -> u8 {
    let e = ((a ^ c) & (b ^ d)) as i32 - (a & b) as i32 - (c & d) as i32 + 2 * (b & c) as i32;
    e.rem_euclid(4) as u8
}

/// `i^{phase_exp} · O₁ ⊗ … ⊗ Oₙ` with canonical letters `Oᵢ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliObservable {
    n: usize,
    phase_exp: u8,
    coords: Gf2Vector,
}

impl PauliObservable {
    /// `i^{phase_exp}` times the canonical observable with the given coordinates.
    pub fn new(phase_exp: u8, coords: Gf2Vector) -> Result<Self, PauliError> {
        if coords.len() % 2 != 0 {
            return Err(PauliError::OddLength(coords.len()));
        }
        Ok(Self {
            n: coords.len() / 2,
            phase_exp: phase_exp % 4,
            coords,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            phase_exp: 0,
            coords: Gf2Vector::zeros(2 * n),
        }
    }

    pub fn from_letters(phase_exp: u8, letters: &[Letter]) -> Self {
        let mut coords = Gf2Vector::zeros(2 * letters.len());
        for (i, l) in letters.iter().enumerate() {
            let (a, b) = l.coords();
            coords.set(2 * i, a);
            coords.set(2 * i + 1, b);
        }
        Self {
            n: letters.len(),
            phase_exp: phase_exp % 4,
            coords,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn coords(&self) -> &Gf2Vector {
        &self.coords
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        Letter::from_coords(self.coords.get(2 * qubit), self.coords.get(2 * qubit + 1))
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n).map(|q| self.letter(q)).collect()
    }

    pub fn is_identity_class(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn y_count(&self) -> usize {
        (0..self.n).filter(|&q| self.letter(q) == Letter::Y).count()
    }

    /// Hermitian with ±1 eigenvalues: canonical letters are Hermitian, so this
    /// holds iff the phase is real.
    pub fn is_observable(&self) -> bool {
        self.phase_exp % 2 == 0
    }

    /// Operator product `self · rhs`, with exact phase.
    pub fn mul(&self, rhs: &PauliObservable) -> Result<PauliObservable, PauliError> {
        if self.n != rhs.n {
            return Err(PauliError::QubitMismatch(self.n, rhs.n));
        }
        let mut phase = self.phase_exp + rhs.phase_exp;
        for q in 0..self.n {
            let a = self.coords.get(2 * q) as u8;
            let b = self.coords.get(2 * q + 1) as u8;
            let c = rhs.coords.get(2 * q) as u8;
            let d = rhs.coords.get(2 * q + 1) as u8;
            phase += letter_product_phase(a, b, c, d);
        }
        Ok(PauliObservable {
            n: self.n,
            phase_exp: phase % 4,
            coords: self.coords.sum(&rhs.coords),
        })
    }

    pub fn commutes_with(&self, other: &PauliObservable) -> Result<bool, PauliError> {
        Ok(!symplectic_form(&self.coords, &other.coords)?)
    }
}

impl fmt::Display for PauliObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.phase_exp {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        })?;
        for q in 0..self.n {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliObservable({self})")
    }
}

/// Accepts an optional leading `-` (or `−`) followed by letters from `IXYZ`.
impl FromStr for PauliObservable {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let (phase, body) = if let Some(rest) = trimmed.strip_prefix('-') {
            (2, rest)
        } else if let Some(rest) = trimmed.strip_prefix('−') {
            (2, rest)
        } else {
            (0, trimmed)
        };
        if body.is_empty() {
            return Err(PauliError::Parse(s.to_string()));
        }
        let letters: Option<Vec<Letter>> = body.chars().map(Letter::from_char).collect();
        match letters {
            Some(l) => Ok(PauliObservable::from_letters(phase, &l)),
            None => Err(PauliError::Parse(s.to_string())),
        }
    }
}

/// Sign of a product of observables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    NonReal,
}

impl Sign {
    pub fn from_phase(phase_exp: u8) -> Self {
        match phase_exp % 4 {
            0 => Sign::Plus,
            2 => Sign::Minus,
            _ => Sign::NonReal,
        }
    }

    pub fn as_i8(self) -> Option<i8> {
        match self {
            Sign::Plus => Some(1),
            Sign::Minus => Some(-1),
            Sign::NonReal => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::NonReal => "i",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliProduct {
    pub result: PauliObservable,
    pub sign: Sign,
}

impl PauliProduct {
    /// True when the product is `±Id`.
    pub fn is_scalar_identity(&self) -> bool {
        self.result.is_identity_class() && self.sign != Sign::NonReal
    }
}

/// The canonical right inverse of [`pi`].
pub fn rho(v: &Gf2Vector) -> Result<PauliObservable, PauliError> {
    if v.len() % 2 != 0 {
        return Err(PauliError::OddLength(v.len()));
    }
    if v.is_zero() {
        return Err(PauliError::TrivialOperator);
    }
    PauliObservable::new(0, v.clone())
}

/// Symplectic coordinates of an observable; forgets the phase.
pub fn pi(o: &PauliObservable) -> Gf2Vector {
    o.coords.clone()
}

/// `⟨x, y⟩ = Σᵢ aᵢ(x)bᵢ(y) + bᵢ(x)aᵢ(y)`; zero iff `ρ(x)` and `ρ(y)` commute.
pub fn symplectic_form(x: &Gf2Vector, y: &Gf2Vector) -> Result<bool, PauliError> {
    if x.len() != y.len() {
        return Err(PauliError::QubitMismatch(x.len() / 2, y.len() / 2));
    }
    if x.len() % 2 != 0 {
        return Err(PauliError::OddLength(x.len()));
    }
    const EVEN: u64 = 0x5555_5555_5555_5555;
    let ones: u32 = x
        .words()
        .iter()
        .zip(y.words())
        .map(|(&xw, &yw)| {
            let swapped = ((yw & EVEN) << 1) | ((yw >> 1) & EVEN);
            (xw & swapped).count_ones()
        })
        .sum();
    Ok(ones & 1 == 1)
}

/// Multiplies the factors left to right and reports the resulting sign.
pub fn product_sign(factors: &[PauliObservable]) -> Result<PauliProduct, PauliError> {
    let Some(first) = factors.first() else {
        return Err(PauliError::EmptyProduct);
    };
    let mut acc = PauliObservable::identity(first.n);
    for f in factors {
        acc = acc.mul(f)?;
    }
    let sign = Sign::from_phase(acc.phase_exp);
    Ok(PauliProduct { result: acc, sign })
}

/// Even number of `Y` letters.
pub fn is_symmetric(o: &PauliObservable) -> bool {
    o.y_count() % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obs(s: &str) -> PauliObservable {
        s.parse().unwrap()
    }

    fn bits(b: &[u8]) -> Gf2Vector {
        Gf2Vector::from_bits(b)
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&bits(&[0, 0, 1, 1])).unwrap().to_string(), "IY");
        assert_eq!(rho(&bits(&[1, 1, 0, 0])).unwrap().to_string(), "YI");
        assert_eq!(rho(&bits(&[1, 0])).unwrap().to_string(), "Z");
        assert_eq!(rho(&bits(&[0, 1])).unwrap().to_string(), "X");
        assert_eq!(rho(&bits(&[0, 0])), Err(PauliError::TrivialOperator));
        assert_eq!(rho(&bits(&[1, 0, 1])), Err(PauliError::OddLength(3)));
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi(&rho(&bits(&[1, 1, 1, 0])).unwrap()), bits(&[1, 1, 1, 0]));
        assert_eq!(pi(&obs("ZZ")), bits(&[1, 0, 1, 0]));
        assert_eq!(pi(&obs("YY")), bits(&[1, 1, 1, 1]));
        assert_eq!(pi(&obs("-YY")), bits(&[1, 1, 1, 1]));
    }

    #[test]
    fn symplectic_form_examples() {
        assert!(symplectic_form(&bits(&[1, 0]), &bits(&[0, 1])).unwrap());
        let v = bits(&[1, 1, 0, 1]);
        assert!(!symplectic_form(&v, &v).unwrap());
        assert!(!symplectic_form(&bits(&[1, 0, 1, 0]), &bits(&[1, 1, 1, 1])).unwrap());
        assert!(symplectic_form(&bits(&[1, 0]), &bits(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn product_sign_examples() {
        let c6 = product_sign(&[obs("XX"), obs("YY"), obs("ZZ")]).unwrap();
        assert_eq!(c6.sign, Sign::Minus);
        assert!(c6.is_scalar_identity());
        let c1 = product_sign(&[obs("XI"), obs("IX"), obs("XX")]).unwrap();
        assert_eq!(c1.sign, Sign::Plus);
        let zz = product_sign(&[obs("Z"), obs("Z")]).unwrap();
        assert!(zz.is_scalar_identity());
        assert_eq!(zz.sign, Sign::Plus);
    }

    #[test]
    fn single_qubit_multiplication_table() {
        let xy = obs("X").mul(&obs("Y")).unwrap();
        assert_eq!(xy.to_string(), "iZ");
        let yx = obs("Y").mul(&obs("X")).unwrap();
        assert_eq!(yx.to_string(), "-iZ");
        assert_eq!(obs("Z").mul(&obs("X")).unwrap().to_string(), "iY");
        assert_eq!(obs("Y").mul(&obs("Z")).unwrap().to_string(), "iX");
        assert_eq!(obs("Y").mul(&obs("Y")).unwrap().to_string(), "I");
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric(&obs("YY")));
        assert!(!is_symmetric(&obs("IY")));
        assert!(is_symmetric(&obs("IIIII")));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(obs("-XYI").to_string(), "-XYI");
        assert_eq!(obs("−XYI").phase_exp(), 2);
        assert!("XQ".parse::<PauliObservable>().is_err());
        assert!("-".parse::<PauliObservable>().is_err());
        assert!("".parse::<PauliObservable>().is_err());
    }

    #[test]
    fn mismatched_qubits() {
        assert_eq!(obs("X").mul(&obs("XX")), Err(PauliError::QubitMismatch(1, 2)));
    }
}
