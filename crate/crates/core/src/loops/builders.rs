use super::LoopTable;

impl LoopTable {
    /// `Z_n`, element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> LoopTable {
        LoopTable::from_fn(n, |a, b| (a + b) % n)
            .expect("cyclic table is a loop")
            .with_name(format!("Z{n}"))
    }

    /// `(Z_2)^m`; element `i` is the bit vector `i`, bit `j` standing for the
    /// `(j+1)`-th basis vector.
    pub fn elementary_abelian(m: u32) -> LoopTable {
        LoopTable::from_fn(1 << m, |a, b| a ^ b)
            .expect("elementary abelian table is a loop")
            .with_name(format!("Z2^{m}"))
    }

    /// Dihedral group of order `2n`: element `i < n` is the rotation `r^i`,
    /// element `n + i` is the reflection `s·r^i`.
    pub fn dihedral(n: usize) -> LoopTable {
        LoopTable::from_fn(2 * n, |a, b| {
            let (fa, ra) = (a / n, a % n);
            let (fb, rb) = (b / n, b % n);
            // s^fa r^ra s^fb r^rb = s^(fa+fb) r^(±ra + rb)
            let r = if fb == 0 {
                (ra + rb) % n
            } else {
                (n - ra + rb) % n
            };
            ((fa + fb) % 2) * n + r
        })
        .expect("dihedral table is a loop")
        .with_name(format!("D{}", 2 * n))
    }

    /// Quaternion group of order 8: `±1, ±i, ±j, ±k` in that index order.
    pub fn quaternion() -> LoopTable {
        // unit index: 0=1, 1=i, 2=j, 3=k; products of units with signs
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let decode = |x: usize| (x / 2, x % 2 == 1);
        LoopTable::from_fn(8, |a, b| {
            let (ua, na) = decode(a);
            let (ub, nb) = decode(b);
            let (u, n) = UNIT[ua][ub];
            2 * u + usize::from(na ^ nb ^ n)
        })
        .expect("quaternion table is a loop")
        .with_name("Q8")
    }

    /// Direct product `self × other` with element `(u, a)` at index
    /// `u + |self|·a`.
    pub fn direct_product(&self, other: &LoopTable) -> LoopTable {
        let k = self.order();
        let t = LoopTable::from_fn(k * other.order(), |x, y| {
            let (u, a) = (x % k, x / k);
            let (v, b) = (y % k, y / k);
            self.mul_ix(u, v) + k * other.mul_ix(a, b)
        })
        .expect("direct product of loops is a loop");
        match (self.name(), other.name()) {
            (Some(l), Some(r)) => t.with_name(format!("{l}x{r}")),
            _ => t,
        }
    }
}
