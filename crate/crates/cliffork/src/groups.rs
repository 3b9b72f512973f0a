//! Finite groups from multiplication tables: closure, order structure,
//! small-group identification and Salingaros vee groups.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::algebra::{blade_mul_bits, Blade, SignatureSpec};
use crate::classification::{group_center_type, CenterType};
use crate::error::{Error, Result};
use crate::matrix::SpinMatrix;

pub const CLOSURE_BOUND: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub elements: Vec<String>,
    /// table[a][b] = index of a·b
    pub table: Vec<Vec<usize>>,
    pub neutral: usize,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.neutral).expect("inverse exists")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.neutral {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// Map element order -> count, over all elements.
    pub fn order_structure(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for a in 0..self.order() {
            *m.entry(self.element_order(a)).or_insert(0) += 1;
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&a| (0..n).all(|b| self.table[a][b] == self.table[b][a])).collect()
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n)
            .all(|a| (0..n).all(|b| (0..n).all(|c| self.table[self.table[a][b]][c] == self.table[a][self.table[b][c]])))
    }

    /// Closure, identity and inverses (associativity checked separately).
    pub fn is_valid(&self) -> bool {
        let n = self.order();
        self.table.len() == n
            && self.table.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n))
            && (0..n).all(|a| self.table[self.neutral][a] == a && self.table[a][self.neutral] == a)
            && (0..n).all(|a| (0..n).any(|b| self.table[a][b] == self.neutral))
    }

    /// Subgroup generated by the given elements.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.neutral] = true;
        let mut out = vec![self.neutral];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &g in gens {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let inside: Vec<bool> = (0..self.order()).map(|x| sub.contains(&x)).collect();
        (0..self.order()).all(|g| {
            let gi = self.inverse(g);
            sub.iter().all(|&h| inside[self.table[self.table[g][h]][gi]])
        })
    }

    /// Factor group by a normal subgroup.
    pub fn quotient(&self, normal: &[usize]) -> Result<GroupTable> {
        if !self.is_normal(normal) {
            return Err(Error::Falsified("subgroup is not normal".into()));
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &h in normal {
                coset_of[self.table[g][h]] = id;
            }
        }
        let table = reps.iter().map(|&a| reps.iter().map(|&b| coset_of[self.table[a][b]]).collect()).collect();
        Ok(GroupTable {
            elements: reps.iter().map(|&r| format!("{}Z", self.elements[r])).collect(),
            table,
            neutral: coset_of[self.neutral],
        })
    }

    pub fn is_elementary_abelian(&self) -> bool {
        self.is_abelian() && (0..self.order()).all(|a| self.table[a][a] == self.neutral)
    }

    /// Same group with elements renumbered by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> GroupTable {
        let n = self.order();
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let table = (0..n).map(|a| (0..n).map(|b| perm[self.table[inv[a]][inv[b]]]).collect()).collect();
        GroupTable {
            elements: (0..n).map(|a| self.elements[inv[a]].clone()).collect(),
            table,
            neutral: perm[self.neutral],
        }
    }

    fn invariants(&self) -> (usize, bool, BTreeMap<usize, usize>, usize) {
        (self.order(), self.is_abelian(), self.order_structure(), self.center().len())
    }
}

/// Closure of `gens` under `mul`, breadth first; deterministic in the
/// generator order. Returns the table and the elements.
pub fn generate_group<T, M, L>(identity: T, gens: &[T], mul: M, label: L) -> Result<(GroupTable, Vec<T>)>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
    L: Fn(&T) -> String,
{
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in gens {
            let y = mul(&elems[k], g);
            if !index.contains_key(&y) {
                if elems.len() >= CLOSURE_BOUND {
                    return Err(Error::ClosureBound(CLOSURE_BOUND));
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
                queue.push_back(elems.len() - 1);
            }
        }
    }
    let table = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| {
                    let c = mul(a, b);
                    *index.get(&c).expect("closed under products of generated elements")
                })
                .collect()
        })
        .collect();
    let elements = elems.iter().map(&label).collect();
    Ok((GroupTable { elements, table, neutral: 0 }, elems))
}

pub fn generate_matrix_group(gens: &[SpinMatrix]) -> Result<(GroupTable, Vec<SpinMatrix>)> {
    let dim = gens.first().map(|g| g.dim()).unwrap_or(1);
    generate_group(SpinMatrix::identity(dim), gens, |a, b| a.mul(b), |m| format!("{:?}", m).replace('\n', " "))
}

/// ±blade as (bits, negative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedBlade {
    pub bits: u32,
    pub negative: bool,
}

impl SignedBlade {
    pub fn mul(&self, o: &SignedBlade, sig: &SignatureSpec) -> SignedBlade {
        let (bits, s) = blade_mul_bits(self.bits, o.bits, sig);
        SignedBlade { bits, negative: self.negative ^ o.negative ^ (s < 0) }
    }

    pub fn label(&self) -> String {
        format!("{}{}", if self.negative { "-" } else { "" }, Blade(self.bits).name())
    }
}

pub fn generate_blade_group(sig: &SignatureSpec, gens: &[SignedBlade]) -> Result<(GroupTable, Vec<SignedBlade>)> {
    let s = *sig;
    generate_group(SignedBlade { bits: 0, negative: false }, gens, move |a, b| a.mul(b, &s), |x| x.label())
}

fn cyclic(n: usize) -> GroupTable {
    GroupTable {
        elements: (0..n).map(|k| format!("a^{}", k)).collect(),
        table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        neutral: 0,
    }
}

fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (n, m) = (g.order(), h.order());
    let idx = |a: usize, b: usize| a * m + b;
    let mut table = vec![vec![0; n * m]; n * m];
    for a1 in 0..n {
        for b1 in 0..m {
            for a2 in 0..n {
                for b2 in 0..m {
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g.table[a1][a2], h.table[b1][b2]);
                }
            }
        }
    }
    GroupTable {
        elements: (0..n * m).map(|k| format!("({},{})", g.elements[k / m], h.elements[k % m])).collect(),
        table,
        neutral: idx(g.neutral, h.neutral),
    }
}

/// Z_m ⋊ Z_n with b a b^-1 = a^r.
fn semidirect_cyclic(m: usize, n: usize, r: usize) -> GroupTable {
    let pow = |j: usize| (0..j).fold(1usize, |acc, _| acc * r % m);
    let idx = |i: usize, j: usize| i * n + j;
    let mut table = vec![vec![0; m * n]; m * n];
    for i1 in 0..m {
        for j1 in 0..n {
            for i2 in 0..m {
                for j2 in 0..n {
                    table[idx(i1, j1)][idx(i2, j2)] = idx((i1 + pow(j1) * i2) % m, (j1 + j2) % n);
                }
            }
        }
    }
    GroupTable { elements: (0..m * n).map(|k| format!("a^{}b^{}", k / n, k % n)).collect(), table, neutral: 0 }
}

/// Dicyclic group of order 4n: x² = a^n, x a x^-1 = a^-1.
fn dicyclic(n: usize) -> GroupTable {
    let m = 2 * n;
    // element (k, e) = a^k x^e, e in {0,1}
    let idx = |k: usize, e: usize| k * 2 + e;
    let mut table = vec![vec![0; 2 * m]; 2 * m];
    for k1 in 0..m {
        for e1 in 0..2 {
            for k2 in 0..m {
                for e2 in 0..2 {
                    let r = match (e1, e2) {
                        (0, e) => idx((k1 + k2) % m, e),
                        // a^k1 x a^k2 = a^(k1-k2) x
                        (1, 0) => idx((k1 + m - k2) % m, 1),
                        // a^k1 x a^k2 x = a^(k1-k2) x² = a^(k1-k2+n)
                        _ => idx((k1 + m - k2 + n) % m, 0),
                    };
                    table[idx(k1, e1)][idx(k2, e2)] = r;
                }
            }
        }
    }
    GroupTable { elements: (0..2 * m).map(|t| format!("a^{}x^{}", t / 2, t % 2)).collect(), table, neutral: 0 }
}

/// N ⋊ Z2 for an involutive automorphism `phi` of N.
fn semidirect_z2(nt: &GroupTable, phi: &[usize]) -> GroupTable {
    let n = nt.order();
    let idx = |a: usize, s: usize| a * 2 + s;
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for a in 0..n {
        for s in 0..2 {
            for b in 0..n {
                for t in 0..2 {
                    let b2 = if s == 1 { phi[b] } else { b };
                    table[idx(a, s)][idx(b, t)] = idx(nt.table[a][b2], (s + t) % 2);
                }
            }
        }
    }
    GroupTable {
        elements: (0..2 * n).map(|k| format!("{}c^{}", nt.elements[k / 2], k % 2)).collect(),
        table,
        neutral: idx(nt.neutral, 0),
    }
}

fn pauli_group() -> GroupTable {
    let g = |a: i64, b: i64| crate::scalar::GaussianScalar::from_ints(a, b);
    let x = SpinMatrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(1, 0), g(0, 0)]]).expect("2x2");
    let z = SpinMatrix::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(-1, 0)]]).expect("2x2");
    let i = SpinMatrix::identity(2).scale(g(0, 1));
    generate_matrix_group(&[x, z, i]).expect("Pauli group closes").0
}

fn catalog() -> &'static Vec<(String, GroupTable)> {
    static CAT: OnceLock<Vec<(String, GroupTable)>> = OnceLock::new();
    CAT.get_or_init(|| {
        let z = cyclic;
        let mut v: Vec<(String, GroupTable)> = Vec::new();
        for n in 1..=16 {
            v.push((if n == 1 { "1".into() } else { format!("Z{}", n) }, z(n)));
        }
        let z2z2 = direct_product(&z(2), &z(2));
        let d4 = semidirect_cyclic(4, 2, 3);
        let q4 = dicyclic(2);
        let z4z2 = direct_product(&z(4), &z(2));
        v.push(("Z2⊗Z2".into(), z2z2.clone()));
        v.push(("Z4⊗Z2".into(), z4z2.clone()));
        v.push(("Z2⊗Z2⊗Z2".into(), direct_product(&z2z2, &z(2))));
        v.push(("D4".into(), d4.clone()));
        v.push(("Q4".into(), q4.clone()));
        v.push(("S3".into(), semidirect_cyclic(3, 2, 2)));
        v.push(("Z3⊗Z3".into(), direct_product(&z(3), &z(3))));
        v.push(("Z6⊗Z2".into(), direct_product(&z(6), &z(2))));
        v.push(("D5".into(), semidirect_cyclic(5, 2, 4)));
        v.push(("D6".into(), semidirect_cyclic(6, 2, 5)));
        v.push(("A4".into(), a4()));
        v.push(("Q6".into(), dicyclic(3)));
        v.push(("D7".into(), semidirect_cyclic(7, 2, 6)));
        v.push(("Z8⊗Z2".into(), direct_product(&z(8), &z(2))));
        v.push(("Z4⊗Z4".into(), direct_product(&z(4), &z(4))));
        v.push(("Z4⊗Z2⊗Z2".into(), direct_product(&z4z2, &z(2))));
        v.push(("Z2⊗Z2⊗Z2⊗Z2".into(), direct_product(&direct_product(&z2z2, &z2z2), &z(1))));
        v.push(("D4⊗Z2".into(), direct_product(&d4, &z(2))));
        v.push(("Q4⊗Z2".into(), direct_product(&q4, &z(2))));
        v.push(("Z4∘D4".into(), pauli_group()));
        // (Z4⊗Z2)⋊Z2 with a -> ab, b -> b; elements of Z4⊗Z2 are i*2+j
        let phi: Vec<usize> = (0..8).map(|k| (k / 2) * 2 + ((k % 2) + (k / 2)) % 2).collect();
        v.push(("(Z4⊗Z2)⋊Z2".into(), semidirect_z2(&z4z2, &phi)));
        v.push(("Z4⋊Z4".into(), semidirect_cyclic(4, 4, 3)));
        v.push(("M16".into(), semidirect_cyclic(8, 2, 5)));
        v.push(("D8".into(), semidirect_cyclic(8, 2, 7)));
        v.push(("SD16".into(), semidirect_cyclic(8, 2, 3)));
        v.push(("Q16".into(), dicyclic(4)));
        v
    })
}

fn a4() -> GroupTable {
    // even permutations of 4 points
    let gens: Vec<[u8; 4]> = vec![[1, 2, 0, 3], [1, 0, 3, 2]];
    let compose = |a: &[u8; 4], b: &[u8; 4]| -> [u8; 4] {
        [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize], a[b[3] as usize]]
    };
    generate_group([0, 1, 2, 3], &gens, compose, |p| format!("{:?}", p)).expect("A4").0
}

/// Names of all catalog entries of a given order.
pub fn catalog_names(order: usize) -> Vec<String> {
    catalog().iter().filter(|(_, t)| t.order() == order).map(|(n, _)| n.clone()).collect()
}

pub fn catalog_group(name: &str) -> Option<GroupTable> {
    catalog().iter().find(|(n, _)| n == name).map(|(_, t)| t.clone())
}

fn generating_set(g: &GroupTable) -> Vec<usize> {
    let mut elems: Vec<usize> = (0..g.order()).collect();
    elems.sort_by_key(|&a| std::cmp::Reverse(g.element_order(a)));
    let mut gens = Vec::new();
    let mut span = vec![g.neutral];
    for a in elems {
        if span.len() == g.order() {
            break;
        }
        if !span.contains(&a) {
            gens.push(a);
            span = g.span(&gens);
        }
    }
    gens
}

/// Exhaustive isomorphism test for small tables.
pub fn isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    if g.invariants() != h.invariants() {
        return false;
    }
    let gens = generating_set(g);
    let cand: Vec<Vec<usize>> =
        gens.iter().map(|&x| (0..h.order()).filter(|&y| h.element_order(y) == g.element_order(x)).collect()).collect();
    let mut choice = vec![0usize; gens.len()];
    try_assign(g, h, &gens, &cand, 0, &mut choice)
}

fn try_assign(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    cand: &[Vec<usize>],
    k: usize,
    choice: &mut Vec<usize>,
) -> bool {
    if k == gens.len() {
        return extends_to_iso(g, h, gens, choice);
    }
    for &y in &cand[k] {
        choice[k] = y;
        if try_assign(g, h, gens, cand, k + 1, choice) {
            return true;
        }
    }
    false
}

fn extends_to_iso(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> bool {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[g.neutral] = h.neutral;
    let mut queue = VecDeque::from([g.neutral]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.table[x][s];
            let fy = h.table[map[x]][t];
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    let mut hit = vec![false; n];
    for &v in &map {
        if v == usize::MAX || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    (0..n).all(|a| (0..n).all(|b| map[g.table[a][b]] == h.table[map[a]][map[b]]))
}

/// Catalog name of a group of order at most 16.
pub fn identify_small_group(tbl: &GroupTable) -> Result<String> {
    if tbl.order() > 16 {
        return Err(Error::NotInCatalog(format!("order {} exceeds 16", tbl.order())));
    }
    catalog()
        .iter()
        .find(|(_, t)| isomorphic(tbl, t))
        .map(|(n, _)| n.clone())
        .ok_or_else(|| Error::NotInCatalog(format!("order {}", tbl.order())))
}

/// Order counts formatted as an order structure: counts of
/// elements of order 2, 4, 8 (omitting trailing zeros).
pub fn order_structure_tuple(os: &BTreeMap<usize, usize>) -> Vec<usize> {
    let mut v =
        vec![os.get(&2).copied().unwrap_or(0), os.get(&4).copied().unwrap_or(0), os.get(&8).copied().unwrap_or(0)];
    while v.len() > 1 && *v.last().expect("nonempty") == 0 {
        v.pop();
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct VeeGroup {
    pub sig: SignatureSpec,
    pub elements: Vec<SignedBlade>,
    pub table: GroupTable,
}

/// Salingaros vee group G(p,q): all ±blades, order 2^{n+1}.
pub fn vee_group(sig: &SignatureSpec) -> Result<VeeGroup> {
    let mut gens = vec![SignedBlade { bits: 0, negative: true }];
    gens.extend((0..sig.n()).map(|k| SignedBlade { bits: 1 << k, negative: false }));
    let (table, elements) = generate_blade_group(sig, &gens)?;
    Ok(VeeGroup { sig: *sig, elements, table })
}

#[derive(Clone, Debug, Serialize)]
pub struct VeeFactorReport {
    pub sig: SignatureSpec,
    pub group_order: usize,
    pub center_order: usize,
    pub center_type: String,
    pub expected_center: String,
    pub factor_order: usize,
    pub expected_factor_order: usize,
    pub elementary_abelian: bool,
    pub passed: bool,
}

fn center_type_of(g: &GroupTable, center: &[usize]) -> Option<CenterType> {
    match center.len() {
        2 => Some(CenterType::Z2),
        4 => {
            if center.iter().all(|&z| g.table[z][z] == g.neutral) {
                Some(CenterType::Z2xZ2)
            } else {
                Some(CenterType::Z4)
            }
        }
        _ => None,
    }
}

/// G(p,q)/Z(p,q) is elementary abelian of order 2^n (even n) or 2^{n-1}
/// (odd n), and the center matches the mod-8 center type.
pub fn vee_factor_check(sig: &SignatureSpec) -> Result<VeeFactorReport> {
    let vg = vee_group(sig)?;
    let g = &vg.table;
    let z = g.center();
    let quo = g.quotient(&z)?;
    let n = sig.n();
    let expected_factor_order = if n.is_multiple_of(2) { 1 << n } else { 1 << (n - 1) };
    let ct = center_type_of(g, &z);
    let expected = group_center_type(sig);
    let elementary = quo.is_elementary_abelian();
    let passed = elementary && quo.order() == expected_factor_order && ct == Some(expected);
    Ok(VeeFactorReport {
        sig: *sig,
        group_order: g.order(),
        center_order: z.len(),
        center_type: ct.map(|c| c.to_string()).unwrap_or_else(|| format!("order {}", z.len())),
        expected_center: expected.to_string(),
        factor_order: quo.order(),
        expected_factor_order,
        elementary_abelian: elementary,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders_and_distinct() {
        let sixteen = catalog_names(16);
        assert_eq!(sixteen.len(), 14);
        let tables: Vec<GroupTable> = sixteen.iter().map(|n| catalog_group(n).unwrap()).collect();
        for t in &tables {
            assert!(t.is_valid() && t.is_associative());
        }
        let mut distinct = 0;
        for i in 0..tables.len() {
            if (0..i).all(|j| !isomorphic(&tables[i], &tables[j])) {
                distinct += 1;
            }
        }
        assert_eq!(distinct, 14);
    }

    #[test]
    fn gauss_klein_and_z4() {
        let e1 = SignedBlade { bits: 1, negative: false };
        let m1 = SignedBlade { bits: 0, negative: true };
        let (t, _) = generate_blade_group(&SignatureSpec::real(1, 0), &[m1, e1]).unwrap();
        assert_eq!(identify_small_group(&t).unwrap(), "Z2⊗Z2");
        let (t, _) = generate_blade_group(&SignatureSpec::real(0, 1), &[m1, e1]).unwrap();
        assert_eq!(identify_small_group(&t).unwrap(), "Z4");
    }
}
