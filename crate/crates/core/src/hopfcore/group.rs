use std::sync::Arc;

use crate::exactfield::Scalar;
use crate::presentation::{NcPoly, Presentation, Rule, Word};
use crate::tensorspace::TensorElement;

use super::{HopfError, HopfStructure, Level};

/// A finite group by Cayley table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn from_table(label: &str, names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
        let n = names.len();
        let bad = |m: &str| Err(HopfError::Basis(format!("group table: {m}")));
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("shape");
        }
        for (i, row) in table.iter().enumerate() {
            if table[0][i] != i || row[0] != i {
                return bad("element 0 is not the identity");
            }
            if !row.contains(&0) {
                return bad("missing inverse");
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        Ok(FiniteGroup { label: label.to_string(), names, table })
    }

    /// `Z_n` with elements `1, g, g2, …`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup { label: format!("Z{n}"), names, table }
    }

    /// `S_3` as permutations of {0,1,2}: identity, the two 3-cycles, then the
    /// three transpositions.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let names = ["1", "r", "r2", "s", "t", "u"].iter().map(|s| s.to_string()).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        FiniteGroup { label: "S3".into(), names, table }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table[a].iter().position(|&x| x == 0).unwrap()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// The basis word of element `k` in [`group_algebra`](Self::group_algebra).
    pub fn element_word(&self, k: usize) -> Word {
        if k == 0 {
            Word::empty()
        } else {
            Word::gen((k - 1) as u16)
        }
    }

    /// `F[G]`: non-identity elements as generators, `x*y -> xy`.
    pub fn group_algebra(&self) -> HopfStructure {
        let n = self.order();
        let gens: Vec<String> = self.names[1..].to_vec();
        let mut rules = Vec::new();
        for a in 1..n {
            for b in 1..n {
                rules.push(Rule {
                    lhs: Word(vec![(a - 1) as u16, (b - 1) as u16]),
                    rhs: NcPoly::word(self.element_word(self.mul(a, b))),
                });
            }
        }
        let pres = Presentation::new(&format!("F[{}]", self.label()), gens, rules, None).expect("group rules");
        let delta = (1..n)
            .map(|a| TensorElement::pure(vec![self.element_word(a), self.element_word(a)]))
            .collect();
        let s: Vec<NcPoly> = (1..n).map(|a| NcPoly::word(self.element_word(self.inverse(a)))).collect();
        HopfStructure::new(
            &format!("F[{}]", self.label()),
            Arc::new(pres),
            Level::Hopf,
            delta,
            vec![Scalar::one(); n - 1],
            Some(s.clone()),
        )
        .expect("group algebra")
        .with_antipode_inverse(s)
        .expect("group algebra")
    }

    /// Index of the generator `e_k` in [`function_algebra`](Self::function_algebra).
    pub fn delta_gen(&self, k: usize) -> u16 {
        if k == 0 {
            (self.order() - 1) as u16
        } else {
            (k - 1) as u16
        }
    }

    /// `O(G)` in the idempotent basis `e_k`; `e0` is eliminated by
    /// `e0 -> 1 - Σ e_k`.
    pub fn function_algebra(&self) -> HopfStructure {
        let n = self.order();
        let mut gens: Vec<String> = (1..n).map(|k| format!("e{k}")).collect();
        gens.push("e0".into());
        let e = |k: usize| self.delta_function(k);
        let mut rules = Vec::new();
        for a in 1..n {
            for b in 1..n {
                rules.push(Rule {
                    lhs: Word(vec![(a - 1) as u16, (b - 1) as u16]),
                    rhs: if a == b { e(a) } else { NcPoly::zero() },
                });
            }
        }
        rules.push(Rule {
            lhs: Word::gen((n - 1) as u16),
            rhs: e(0),
        });
        let pres =
            Presentation::new(&format!("O({})", self.label()), gens, rules, None).expect("function algebra rules");
        let gen_elems: Vec<usize> = (1..n).chain(std::iter::once(0)).collect();
        let mut delta = Vec::new();
        let mut eps = Vec::new();
        let mut s = Vec::new();
        for &k in &gen_elems {
            let mut t = TensorElement::zero(2);
            for h in 0..n {
                let rest = self.mul(self.inverse(h), k);
                t = t.add(&TensorElement::from_polys(&[&e(h), &e(rest)]));
            }
            delta.push(t);
            eps.push(if k == 0 { Scalar::one() } else { Scalar::zero() });
            s.push(e(self.inverse(k)));
        }
        HopfStructure::new(&format!("O({})", self.label()), Arc::new(pres), Level::Hopf, delta, eps, Some(s.clone()))
            .expect("function algebra")
            .with_antipode_inverse(s)
            .expect("function algebra")
    }

    /// `e_k` as a normal-form element of the function algebra.
    pub fn delta_function(&self, k: usize) -> NcPoly {
        let n = self.order();
        if k == 0 {
            let mut p = NcPoly::one();
            for j in 1..n {
                p.add_term(Word::gen((j - 1) as u16), -Scalar::one());
            }
            p
        } else {
            NcPoly::gen((k - 1) as u16)
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}
