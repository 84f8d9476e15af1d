//! Brute-force coend quotient of `P([p],[q];[r])` over levels `m <= B`.
//!
//! Representatives `(α, β, γ)` are glued along every relation instance
//! `(α∘f, β∘f, γ) ~ (α, β, f∘γ)` with a union-find, without consulting the
//! canonical-form machinery. Maps are plain index tables here.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::simplex::{count_maps, enumerate_tables};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationReport {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub bound: usize,
    pub classes_at_bound: usize,
    pub classes_at_next: usize,
    /// `|Δ([r],[p])| · |Δ([r],[q])|`.
    pub expected: usize,
}

impl TruncationReport {
    pub fn is_stable(&self) -> bool {
        self.classes_at_bound == self.classes_at_next && self.classes_at_bound == self.expected
    }
}

/// Quotient class counts at `B` and `B + 1`, against the `η` count.
pub fn truncation_stability(p: usize, q: usize, r: usize, bound: usize) -> Result<TruncationReport> {
    if bound < r {
        return Err(Error::ParameterOutOfRange(format!(
            "truncation bound {bound} is below r = {r}"
        )));
    }
    let expected = count_maps(r, p) * count_maps(r, q);
    Ok(TruncationReport {
        p,
        q,
        r,
        bound,
        classes_at_bound: quotient_count(p, q, r, bound),
        classes_at_next: quotient_count(p, q, r, bound + 1),
        expected: usize::try_from(expected).expect("desk-scale count"),
    })
}

struct Level {
    alphas: Vec<Vec<usize>>,
    betas: Vec<Vec<usize>>,
    gammas: Vec<Vec<usize>>,
    alpha_index: HashMap<Vec<usize>, usize>,
    beta_index: HashMap<Vec<usize>, usize>,
    gamma_index: HashMap<Vec<usize>, usize>,
    offset: usize,
}

impl Level {
    fn id(&self, a: usize, b: usize, g: usize) -> usize {
        self.offset + (a * self.betas.len() + b) * self.gammas.len() + g
    }

    fn size(&self) -> usize {
        self.alphas.len() * self.betas.len() * self.gammas.len()
    }
}

fn indexed(tables: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    tables.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

fn quotient_count(p: usize, q: usize, r: usize, bound: usize) -> usize {
    let mut levels = Vec::with_capacity(bound + 1);
    let mut offset = 0;
    for m in 0..=bound {
        let alphas = enumerate_tables(m, p);
        let betas = enumerate_tables(m, q);
        let gammas = enumerate_tables(r, m);
        let level = Level {
            alpha_index: indexed(&alphas),
            beta_index: indexed(&betas),
            gamma_index: indexed(&gammas),
            alphas,
            betas,
            gammas,
            offset,
        };
        offset += level.size();
        levels.push(level);
    }

    let mut uf = UnionFind::<usize>::new(offset);
    for (m, target) in levels.iter().enumerate() {
        for source in &levels {
            let m_prime = source.alphas[0].len() - 1;
            for f in enumerate_tables(m_prime, m) {
                // α∘f, β∘f at level m' and f∘γ at level m, by index.
                let alpha_f: Vec<usize> = target
                    .alphas
                    .iter()
                    .map(|a| source.alpha_index[&f.iter().map(|&i| a[i]).collect::<Vec<_>>()])
                    .collect();
                let beta_f: Vec<usize> = target
                    .betas
                    .iter()
                    .map(|b| source.beta_index[&f.iter().map(|&i| b[i]).collect::<Vec<_>>()])
                    .collect();
                let f_gamma: Vec<usize> = source
                    .gammas
                    .iter()
                    .map(|g| target.gamma_index[&g.iter().map(|&i| f[i]).collect::<Vec<_>>()])
                    .collect();
                for (a, &af) in alpha_f.iter().enumerate() {
                    for (b, &bf) in beta_f.iter().enumerate() {
                        for (g, &fg) in f_gamma.iter().enumerate() {
                            uf.union(source.id(af, bf, g), target.id(a, b, fg));
                        }
                    }
                }
            }
        }
    }
    (0..offset).filter(|&i| uf.find(i) == i).count()
}
