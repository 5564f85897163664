//! DFAO and k-uniform-morphism realizations of rank-2, one-dimensional
//! block-additive sequences, plus the incidence-matrix primitivity test.
//!
//! States are pairs `(g, i)` of an accumulated group element and the last
//! digit read, indexed as `g_index * k + i`. The transition on digit `j` is
//! `(g, i) -> (g + f(j, i), j)`; reading the digits of `n` most significant
//! first from `(0, 0)` and projecting the group component yields `u_n`.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::radix::Digits;
use crate::weights::WeightFunction;

/// Largest supported state count for automaton construction.
pub const STATE_GUARD: u64 = 1 << 16;

/// Deterministic finite automaton with output computing a rank-2 sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    base: u32,
    group: GroupSpec,
    /// `delta[s * k + j]` is the successor of state `s` on digit `j`.
    delta: Vec<u32>,
    /// `output[s]` is the canonical index of the group component of `s`.
    output: Vec<u16>,
}

impl Dfao {
    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Number of states, `|G| * k`.
    pub fn state_count(&self) -> u32 {
        self.output.len() as u32
    }

    /// The start state `(0, 0)`.
    pub fn start(&self) -> u32 {
        0
    }

    /// Index of the state `(g, i)`.
    pub fn state_index(&self, g_index: u64, digit: u32) -> u32 {
        debug_assert!(digit < self.base);
        (g_index * self.base as u64 + digit as u64) as u32
    }

    /// Group-element index and last-read digit of a state.
    pub fn state_parts(&self, state: u32) -> (u64, u32) {
        ((state / self.base) as u64, state % self.base)
    }

    pub fn transition(&self, state: u32, digit: u32) -> u32 {
        self.delta[state as usize * self.base as usize + digit as usize]
    }

    /// Output map: the group component of a state, as a canonical index.
    pub fn output_index(&self, state: u32) -> u16 {
        self.output[state as usize]
    }

    /// Feeds the digits of `n` most significant first and returns the output
    /// index of the final state; `n = 0` reads the empty word.
    pub fn run_index(&self, n: u64) -> u16 {
        let digits = Digits::of(n, self.base).expect("base validated at construction");
        let mut state = self.start();
        for &d in digits.digits().iter().rev() {
            state = self.transition(state, d);
        }
        self.output_index(state)
    }

    /// `u_n` computed by the automaton.
    pub fn run(&self, n: u64) -> GroupElement {
        self.group
            .index_element(self.run_index(n) as u64)
            .expect("outputs are valid element indices")
    }

    /// All transitions as `(state, digit, successor)`, in state-major order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        let k = self.base;
        (0..self.state_count()).flat_map(move |s| {
            (0..k).map(move |j| (s, j, self.transition(s, j)))
        })
    }
}

/// Builds the DFAO of a rank-2, one-dimensional weight function.
pub fn build_dfao(w: &WeightFunction) -> Result<Dfao> {
    let (delta, output) = transition_tables(w)?;
    Ok(Dfao { base: w.base(), group: w.group().clone(), delta, output })
}

fn transition_tables(w: &WeightFunction) -> Result<(Vec<u32>, Vec<u16>)> {
    if w.rank() != 2 {
        return Err(Error::RankUnsupported { expected: 2, found: w.rank() });
    }
    if w.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: w.dim() });
    }
    let k = w.base() as u64;
    let order = w.group().order();
    let states = order * k;
    if states > STATE_GUARD {
        return Err(Error::StateGuard { states, guard: STATE_GUARD });
    }
    let ops = w.ops();
    let mut delta = vec![0u32; (states * k) as usize];
    let mut output = vec![0u16; states as usize];
    for g in 0..order {
        for i in 0..k {
            let s = (g * k + i) as usize;
            output[s] = g as u16;
            for j in 0..k {
                let g_next = ops.add_idx(g as u16, w.value_index(&[j, i]));
                delta[s * k as usize + j as usize] = (g_next as u64 * k + j) as u32;
            }
        }
    }
    Ok((delta, output))
}

/// The k-uniform morphism whose fixed point projects to the sequence: the
/// image of a state lists its DFAO successors digit by digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    base: u32,
    group: GroupSpec,
    images: Vec<u32>,
    output: Vec<u16>,
}

/// Builds the morphism of a rank-2, one-dimensional weight function.
pub fn build_morphism(w: &WeightFunction) -> Result<Morphism> {
    let (images, output) = transition_tables(w)?;
    Ok(Morphism { base: w.base(), group: w.group().clone(), images, output })
}

impl Morphism {
    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn state_count(&self) -> u32 {
        self.output.len() as u32
    }

    /// Image word of a state; always of length `k`.
    pub fn image(&self, state: u32) -> &[u32] {
        let k = self.base as usize;
        &self.images[state as usize * k..(state as usize + 1) * k]
    }

    /// First `len` letters of the fixed point starting at the seed state,
    /// computed by substituting on a growing prefix.
    pub fn prefix(&self, len: usize) -> Vec<u32> {
        let mut word = vec![0u32];
        if len == 0 {
            return Vec::new();
        }
        while word.len() < len {
            let mut next = Vec::with_capacity(word.len() * self.base as usize);
            for &s in &word {
                next.extend_from_slice(self.image(s));
            }
            debug_assert!(next.len() > word.len(), "k >= 2 guarantees growth");
            word = next;
        }
        word.truncate(len);
        word
    }

    /// Letter-to-letter projection of the fixed point: the sequence prefix
    /// as canonical element indices.
    pub fn output_prefix(&self, len: usize) -> Vec<u16> {
        self.prefix(len).into_iter().map(|s| self.output[s as usize]).collect()
    }

    pub fn output_index(&self, state: u32) -> u16 {
        self.output[state as usize]
    }
}

/// Result of the incidence-matrix primitivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivityReport {
    /// True when some power up to `bound` is entrywise positive.
    pub primitive: bool,
    /// Smallest exponent with an entrywise positive power, if one exists
    /// within the bound.
    pub witness: Option<u32>,
    /// Search bound `2|G| + 3`.
    pub bound: u32,
}

/// Builds the 0/1 incidence matrix of the DFAO transitions and powers it,
/// reporting the smallest exponent at which every entry is positive, searched
/// up to `2|G| + 3`.
pub fn primitivity_check(w: &WeightFunction) -> Result<PrimitivityReport> {
    let (delta, _) = transition_tables(w)?;
    let k = w.base() as usize;
    let states = delta.len() / k;
    let bound = 2 * w.group().order() as u32 + 3;

    let words = states.div_ceil(64);
    let mut adjacency = vec![0u64; states * words];
    for s in 0..states {
        for j in 0..k {
            let t = delta[s * k + j] as usize;
            adjacency[s * words + t / 64] |= 1 << (t % 64);
        }
    }

    let full_row = |row: &[u64]| -> bool {
        let mut ok = true;
        for (w_idx, &word) in row.iter().enumerate() {
            let bits = if w_idx == words - 1 && states % 64 != 0 {
                (1u64 << (states % 64)) - 1
            } else {
                u64::MAX
            };
            ok &= word & bits == bits;
        }
        ok
    };

    let mut power = adjacency.clone();
    for e in 1..=bound {
        if power.chunks(words).all(full_row) {
            return Ok(PrimitivityReport { primitive: true, witness: Some(e), bound });
        }
        // power <- power * adjacency (boolean product).
        let mut next = vec![0u64; states * words];
        for s in 0..states {
            let row = &power[s * words..(s + 1) * words];
            let out = &mut next[s * words..(s + 1) * words];
            for (w_idx, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let t = w_idx * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for (o, &a) in out.iter_mut().zip(&adjacency[t * words..(t + 1) * words]) {
                        *o |= a;
                    }
                }
            }
        }
        power = next;
    }
    Ok(PrimitivityReport { primitive: false, witness: None, bound })
}

/// GraphViz rendering: one node per state labeled `(g,i)|output`, one edge
/// per transition labeled by the input digit, in deterministic order.
pub fn export_dot(a: &Dfao) -> String {
    let mut out = String::from("digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n");
    for s in 0..a.state_count() {
        let (g, i) = a.state_parts(s);
        out.push_str(&format!("  q{s} [label=\"({g},{i})|{}\"];\n", a.output_index(s)));
    }
    for (s, j, t) in a.edges() {
        out.push_str(&format!("  q{s} -> q{t} [label=\"{j}\"];\n"));
    }
    out.push_str("}\n");
    out
}

/// Plain-text dump mirroring the weight-file conventions: a header followed
/// by one line per state.
pub fn export_dump(a: &Dfao) -> String {
    let mut out = format!(
        "grs-dfao v1\nbase {}\ngroup {}\nstates {}\nstart {}\n",
        a.base(),
        a.group(),
        a.state_count(),
        a.start()
    );
    for s in 0..a.state_count() {
        let (g, i) = a.state_parts(s);
        let targets: Vec<String> =
            (0..a.base()).map(|j| a.transition(s, j).to_string()).collect();
        out.push_str(&format!(
            "state {s} g {g} digit {i} out {} delta {}\n",
            a.output_index(s),
            targets.join(" ")
        ));
    }
    out
}
