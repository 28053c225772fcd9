//! Built-in group families with matching presentations.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::table::{FiniteGroup, MAX_ORDER};
use super::word::{Letter, Presentation, Word};
use super::GroupError;
use crate::finite_rings::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `C_n`.
    Cyclic(usize),
    /// `C_a × C_b`.
    DirectProduct(usize, usize),
    /// `(C_p)^rank`, rank 1 to 3.
    ElementaryAbelian(u32, u32),
    /// `Q_{2^n}` given by its order `2^n`, `n >= 3`.
    GeneralizedQuaternion(usize),
    /// Dihedral group given by its order `2^n`, `n >= 2`.
    Dihedral(usize),
    /// `C_3 ⋊ C_{2^n}` with the generator of `C_{2^n}` inverting `C_3`.
    SemidirectC3C2n(u32),
    /// The alternating group on four points.
    Alternating4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::DirectProduct(a, b) => write!(f, "C{a}xC{b}"),
            Family::ElementaryAbelian(p, r) => {
                let parts: Vec<String> = (0..*r).map(|_| format!("C{p}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            Family::GeneralizedQuaternion(n) => write!(f, "Q{n}"),
            Family::Dihedral(n) => write!(f, "D{n}"),
            Family::SemidirectC3C2n(n) => write!(f, "C3:C{}", 1u64 << n),
            Family::Alternating4 => write!(f, "A4"),
        }
    }
}

fn power_of_two_exponent(n: usize) -> Option<u32> {
    (n.is_power_of_two()).then(|| n.trailing_zeros())
}

fn commutator(a: usize, b: usize) -> Word {
    Word(vec![
        Letter::pos(a),
        Letter::pos(b),
        Letter::neg(a),
        Letter::neg(b),
    ])
}

/// Builds a family member as a multiplication table with its presentation.
pub fn make_family(family: &Family) -> Result<FiniteGroup, GroupError> {
    let unsupported = || GroupError::UnsupportedFamily(family.to_string());
    match *family {
        Family::Cyclic(n) => {
            if n == 0 {
                return Err(unsupported());
            }
            check_order(n)?;
            let pres = Presentation::new(names(&["s"]), vec![Word::power(0, n as i64)])?;
            // C_1 is generated by the identity.
            FiniteGroup::from_mul_fn(n, |a, b| (a + b) % n, pres, vec![1 % n])
        }
        Family::DirectProduct(a, b) => abelian(&[a, b]),
        Family::ElementaryAbelian(p, rank) => {
            if !is_prime(p as u64) || !(1..=3).contains(&rank) {
                return Err(unsupported());
            }
            abelian(&vec![p as usize; rank as usize])
        }
        Family::GeneralizedQuaternion(order) => match power_of_two_exponent(order) {
            Some(k) if k >= 3 => metacyclic_2group(order, true),
            _ => Err(unsupported()),
        },
        Family::Dihedral(order) => match power_of_two_exponent(order) {
            Some(k) if k >= 2 => metacyclic_2group(order, false),
            _ => Err(unsupported()),
        },
        Family::SemidirectC3C2n(n) => {
            if n == 0 || n > 12 {
                return Err(unsupported());
            }
            let m = 1usize << n;
            check_order(3 * m)?;
            // x^i y^j stored at i + 3j; y x y^{-1} = x^{-1}.
            let mul = |a: usize, b: usize| {
                let (i, j) = (a % 3, a / 3);
                let (k, l) = (b % 3, b / 3);
                let k = if j % 2 == 1 { (3 - k) % 3 } else { k };
                (i + k) % 3 + 3 * ((j + l) % m)
            };
            let pres = Presentation::new(
                names(&["x", "y"]),
                vec![
                    Word::power(0, 3),
                    Word::power(1, m as i64),
                    Word(vec![
                        Letter::pos(1),
                        Letter::pos(0),
                        Letter::neg(1),
                        Letter::pos(0),
                    ]),
                ],
            )?;
            FiniteGroup::from_mul_fn(3 * m, mul, pres, vec![1, 3])
        }
        Family::Alternating4 => alternating4(),
    }
}

fn check_order(n: usize) -> Result<(), GroupError> {
    if n > MAX_ORDER {
        Err(GroupError::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// `C_{m_0} × C_{m_1} × …`, mixed radix with the first factor most significant.
fn abelian(moduli: &[usize]) -> Result<FiniteGroup, GroupError> {
    if moduli.contains(&0) {
        return Err(GroupError::UnsupportedFamily(format!("{moduli:?}")));
    }
    let order: usize = moduli.iter().product();
    check_order(order)?;
    let k = moduli.len();
    let digits = |mut x: usize| {
        let mut d = vec![0usize; k];
        for i in (0..k).rev() {
            d[i] = x % moduli[i];
            x /= moduli[i];
        }
        d
    };
    let compose = |d: &[usize]| d.iter().zip(moduli).fold(0, |acc, (&v, &m)| acc * m + v);
    let mul = |a: usize, b: usize| {
        let (da, db) = (digits(a), digits(b));
        let sum: Vec<usize> = (0..k).map(|i| (da[i] + db[i]) % moduli[i]).collect();
        compose(&sum)
    };
    let gens: Vec<usize> = (0..k)
        .map(|i| {
            let mut d = vec![0usize; k];
            d[i] = 1 % moduli[i];
            compose(&d)
        })
        .collect();
    let mut relators: Vec<Word> = moduli
        .iter()
        .enumerate()
        .map(|(i, &m)| Word::power(i, m as i64))
        .collect();
    for i in 0..k {
        for j in i + 1..k {
            relators.push(commutator(i, j));
        }
    }
    let pres = Presentation::new(super::table::default_names(k), relators)?;
    FiniteGroup::from_mul_fn(order, mul, pres, gens)
}

/// Dihedral or generalized quaternion group of order `2m`: `s` of order `m`,
/// `t s t^{-1} = s^{-1}`, and `t^2 = 1` or `t^2 = s^{m/2}`.
fn metacyclic_2group(order: usize, quaternion: bool) -> Result<FiniteGroup, GroupError> {
    check_order(order)?;
    let m = order / 2;
    // s^i t^j stored at i + m j.
    let mul = |a: usize, b: usize| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        let k = if j == 1 { (m - k) % m } else { k };
        let mut e = (i + k) % m;
        let mut f = j + l;
        if f == 2 {
            f = 0;
            if quaternion {
                e = (e + m / 2) % m;
            }
        }
        e + m * f
    };
    let conj = Word(vec![
        Letter::pos(1),
        Letter::pos(0),
        Letter::neg(1),
        Letter::pos(0),
    ]);
    let relators = if quaternion {
        vec![
            Word::power(0, (m / 2) as i64).concat(&Word::power(1, -2)),
            Word::power(0, m as i64),
            conj,
        ]
    } else {
        vec![Word::power(0, m as i64), Word::power(1, 2), conj]
    };
    let pres = Presentation::new(names(&["s", "t"]), relators)?;
    FiniteGroup::from_mul_fn(order, mul, pres, vec![1 % m, m])
}

fn alternating4() -> Result<FiniteGroup, GroupError> {
    let mut perms: Vec<[u8; 4]> = Vec::new();
    let mut stack = vec![[0u8, 1, 2, 3]];
    let a = [1u8, 2, 0, 3];
    let b = [1u8, 0, 3, 2];
    let compose = |p: &[u8; 4], q: &[u8; 4]| -> [u8; 4] {
        // (p·q)(x) = p(q(x))
        [
            p[q[0] as usize],
            p[q[1] as usize],
            p[q[2] as usize],
            p[q[3] as usize],
        ]
    };
    while let Some(x) = stack.pop() {
        if perms.contains(&x) {
            continue;
        }
        perms.push(x);
        stack.push(compose(&x, &a));
        stack.push(compose(&x, &b));
    }
    perms.sort_unstable();
    let idx = |p: &[u8; 4]| perms.iter().position(|q| q == p).unwrap();
    let rows: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| idx(&compose(p, q))).collect())
        .collect();
    let pres = Presentation::new(
        names(&["a", "b"]),
        vec![
            Word::power(0, 3),
            Word::power(1, 2),
            Word([Letter::pos(0), Letter::pos(1)].repeat(3)),
        ],
    )?;
    FiniteGroup::from_table_with_presentation(&rows, pres, vec![idx(&a), idx(&b)])
}

/// Parses the family grammar `C <n>`, `Q <2^n>`, `D <2^n>`, `CxC <a> <b>`,
/// `C3xC3`, `C3semi <2^n>`, `A4`.
pub fn parse_family(tokens: &[&str]) -> Result<Family, GroupError> {
    let bad = || GroupError::UnsupportedFamily(tokens.join(" "));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match tokens {
        ["C", n] => Ok(Family::Cyclic(num(n)?)),
        ["Q", n] => Ok(Family::GeneralizedQuaternion(num(n)?)),
        ["D", n] => Ok(Family::Dihedral(num(n)?)),
        ["CxC", a, b] => Ok(Family::DirectProduct(num(a)?, num(b)?)),
        ["C3xC3"] => Ok(Family::ElementaryAbelian(3, 2)),
        ["C3semi", n] => {
            let n = num(n)?;
            match power_of_two_exponent(n) {
                Some(k) if k >= 1 => Ok(Family::SemidirectC3C2n(k)),
                _ => Err(bad()),
            }
        }
        ["A4"] => Ok(Family::Alternating4),
        _ => Err(bad()),
    }
}
