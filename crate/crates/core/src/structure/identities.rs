use std::fmt;

use crate::loops::LoopTable;

/// Equational laws checked exhaustively over all element tuples.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `x(y·xz) = (x·yx)z`
    LeftBol,
    /// `((zx)y)x = z((xy)x)`
    RightBol,
    /// `x(y·xz) = (xy·x)z`
    Moufang,
    Associative,
    Commutative,
    /// `L_x^m = L_{x^m}` for `0 ≤ m ≤ |x|`
    LeftPowerAlternative,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::LeftBol,
        Identity::RightBol,
        Identity::Moufang,
        Identity::Associative,
        Identity::Commutative,
        Identity::LeftPowerAlternative,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Identity::LeftBol => "left_bol",
            Identity::RightBol => "right_bol",
            Identity::Moufang => "moufang",
            Identity::Associative => "associative",
            Identity::Commutative => "commutative",
            Identity::LeftPowerAlternative => "left_power_alternative",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

pub fn check_identity(q: &LoopTable, which: Identity) -> bool {
    let n = q.order();
    let m = |a, b| q.mul_ix(a, b);
    match which {
        Identity::LeftBol => triples(n, |x, y, z| m(x, m(y, m(x, z))) == m(m(x, m(y, x)), z)),
        Identity::RightBol => triples(n, |x, y, z| m(m(m(z, x), y), x) == m(z, m(m(x, y), x))),
        Identity::Moufang => triples(n, |x, y, z| m(x, m(y, m(x, z))) == m(m(m(x, y), x), z)),
        Identity::Associative => triples(n, |x, y, z| m(x, m(y, z)) == m(m(x, y), z)),
        Identity::Commutative => (0..n).all(|x| (0..x).all(|y| m(x, y) == m(y, x))),
        Identity::LeftPowerAlternative => left_power_alternative(q),
    }
}

fn triples(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    // x = 1 makes every law here trivial, as does z = 1 for the Bol/Moufang
    // laws; scanning them anyway keeps this generic.
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
}

fn left_power_alternative(q: &LoopTable) -> bool {
    let n = q.order();
    q.elements().all(|x| {
        let Ok(order) = q.element_order(x) else {
            return false;
        };
        // L_x^m applied pointwise, against the row of x^m
        let mut image: Vec<usize> = (0..n).collect();
        let mut power = 0;
        for _ in 0..=order {
            if (0..n).any(|y| image[y] != q.mul_ix(power, y)) {
                return false;
            }
            for v in image.iter_mut() {
                *v = q.mul_ix(x.index(), *v);
            }
            power = q.mul_ix(x.index(), power);
        }
        true
    })
}
