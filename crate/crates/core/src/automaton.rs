//! The Brink-Howlett automaton on small inversion sets.
//!
//! States are the sets `Sigma(w)`; reading a letter `s` from state `T` is
//! allowed iff `a_s` is not in `T` and leads to `({a_s} + s(T))` restricted to
//! the small roots. A word `s_1 ... s_k` is read left to right, and the state
//! after a prefix `s_1 ... s_p` is `Sigma(s_p ... s_1)`, so the accepted
//! language is exactly the set of reduced words.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::affine::AffineWeylGroup;
use crate::error::{Error, Result};
use crate::small_low::{SmallInvSet, SmallRootTable};

#[derive(Debug, Clone)]
pub struct Automaton {
    table: SmallRootTable,
    states: Vec<SmallInvSet>,
    transitions: Vec<Vec<Option<usize>>>,
    letters: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionTable {
    pub states: Vec<String>,
    /// `(from, letter, to)`, sorted.
    pub transitions: Vec<(usize, usize, usize)>,
}

impl Automaton {
    pub fn build(group: &AffineWeylGroup) -> Self {
        let table = SmallRootTable::new(group);
        let letters = group.num_generators();
        let highest = group.system().highest_index();
        let simple: Vec<usize> = (0..letters).map(|s| table.simple_index(s, highest)).collect();

        let mut states = vec![SmallInvSet::new()];
        let mut index: HashMap<SmallInvSet, usize> = HashMap::from([(SmallInvSet::new(), 0)]);
        let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();
        let mut next = 0;
        while next < states.len() {
            let t = states[next];
            let mut row = vec![None; letters];
            for s in 0..letters {
                if t.contains(simple[s]) {
                    continue;
                }
                let mut image: SmallInvSet = t.iter().filter_map(|i| table.act(s, i)).collect();
                image.insert(simple[s]);
                let id = *index.entry(image).or_insert_with(|| {
                    states.push(image);
                    states.len() - 1
                });
                row[s] = Some(id);
            }
            transitions.push(row);
            next += 1;
        }
        Automaton {
            table,
            states,
            transitions,
            letters,
        }
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[SmallInvSet] {
        &self.states
    }

    pub fn alphabet_size(&self) -> usize {
        self.letters
    }

    pub fn table(&self) -> &SmallRootTable {
        &self.table
    }

    pub fn step(&self, state: usize, letter: usize) -> Option<usize> {
        self.transitions[state][letter]
    }

    /// Final state after reading `word`, or `None` if some step is undefined.
    pub fn run(&self, word: &[usize]) -> Result<Option<usize>> {
        let mut q = 0;
        for &s in word {
            if s >= self.letters {
                return Err(Error::InvalidLetter {
                    letter: s,
                    size: self.letters,
                });
            }
            match self.transitions[q][s] {
                Some(next) => q = next,
                None => return Ok(None),
            }
        }
        Ok(Some(q))
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.run(word)?.is_some())
    }

    /// Number of accepted (reduced) words of each length `0..=max_len`.
    pub fn word_counts(&self, max_len: usize) -> Vec<u128> {
        let mut counts = vec![0u128; self.states.len()];
        counts[0] = 1;
        let mut out = vec![1u128];
        for _ in 0..max_len {
            let mut next = vec![0u128; self.states.len()];
            for (q, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for target in self.transitions[q].iter().flatten() {
                    next[*target] += c;
                }
            }
            out.push(next.iter().sum());
            counts = next;
        }
        out
    }

    /// Node label: the sign-type encoding of the state (`-` for `a`, `+` for
    /// `d - a`, `0` otherwise).
    pub fn state_label(&self, state: usize) -> String {
        let npos = self.table.num_positive();
        let t = &self.states[state];
        (0..npos)
            .map(|i| match (t.contains(i), t.contains(npos + i)) {
                (true, false) => '-',
                (false, true) => '+',
                (false, false) => '0',
                (true, true) => '*',
            })
            .collect()
    }

    pub fn transition_table(&self) -> TransitionTable {
        let mut transitions = Vec::new();
        for (q, row) in self.transitions.iter().enumerate() {
            for (s, target) in row.iter().enumerate() {
                if let Some(t) = target {
                    transitions.push((q, s, *t));
                }
            }
        }
        TransitionTable {
            states: (0..self.states.len()).map(|q| self.state_label(q)).collect(),
            transitions,
        }
    }

    pub fn to_dot(&self) -> String {
        let tt = self.transition_table();
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
        for (q, label) in tt.states.iter().enumerate() {
            let _ = writeln!(out, "  q{q} [label=\"{label}\"];");
        }
        for (q, s, t) in tt.transitions {
            let _ = writeln!(out, "  q{q} -> q{t} [label=\"s{s}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Reads back the output of [`Automaton::to_dot`].
pub fn parse_dot(text: &str) -> Result<TransitionTable> {
    let bad = |line: &str| Error::Parse(format!("dot line {line:?}"));
    let node_id = |s: &str| -> Option<usize> { s.trim().strip_prefix('q')?.parse().ok() };
    let label_of = |s: &str| -> Option<String> {
        let start = s.find("label=\"")? + 7;
        let end = start + s[start..].find('"')?;
        Some(s[start..end].to_string())
    };
    let mut states: Vec<(usize, String)> = Vec::new();
    let mut transitions = Vec::new();
    for line in text.lines().map(str::trim) {
        if !line.starts_with('q') {
            continue;
        }
        let label = label_of(line).ok_or_else(|| bad(line))?;
        let head = &line[..line.find('[').ok_or_else(|| bad(line))?];
        if let Some((from, to)) = head.split_once("->") {
            let letter = label.strip_prefix('s').and_then(|x| x.parse().ok()).ok_or_else(|| bad(line))?;
            transitions.push((
                node_id(from).ok_or_else(|| bad(line))?,
                letter,
                node_id(to).ok_or_else(|| bad(line))?,
            ));
        } else {
            states.push((node_id(head).ok_or_else(|| bad(line))?, label));
        }
    }
    states.sort();
    if states.iter().enumerate().any(|(i, (q, _))| i != *q) {
        return Err(Error::Parse("node ids are not 0..n".into()));
    }
    transitions.sort();
    Ok(TransitionTable {
        states: states.into_iter().map(|(_, l)| l).collect(),
        transitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn automaton(t: &str) -> (AffineWeylGroup, Automaton) {
        let g = AffineWeylGroup::new(t.parse().unwrap());
        let a = Automaton::build(&g);
        (g, a)
    }

    #[test]
    fn state_counts() {
        for (t, n) in [("A1", 3), ("A2", 16), ("B2", 25), ("G2", 49), ("A3", 125)] {
            assert_eq!(automaton(t).1.num_states(), n, "{t}");
        }
    }

    #[test]
    fn first_step_is_the_simple_root() {
        let (g, a) = automaton("B2");
        for s in 0..3 {
            let q = a.step(0, s).unwrap();
            let expected = a.table().index_of(&g.simple_root(s)).unwrap();
            assert_eq!(a.states()[q].iter().collect::<Vec<_>>(), vec![expected]);
        }
    }

    #[test]
    fn small_words() {
        let (_, a) = automaton("A2");
        assert!(a.is_reduced(&[]).unwrap());
        assert!(!a.is_reduced(&[1, 1]).unwrap());
        assert!(a.is_reduced(&[1, 2, 1]).unwrap());
        assert!(!a.is_reduced(&[1, 2, 1, 2]).unwrap());
        assert!(matches!(a.is_reduced(&[3]), Err(Error::InvalidLetter { letter: 3, size: 3 })));
    }

    #[test]
    fn first_word_counts() {
        let (_, a) = automaton("A3");
        let c = a.word_counts(2);
        assert_eq!(c[0], 1);
        assert_eq!(c[1], 4);
        assert_eq!(c[2], 12);
    }

    #[test]
    fn dot_round_trip() {
        let (_, a) = automaton("A2");
        let dot = a.to_dot();
        assert!(dot.starts_with("digraph"));
        assert_eq!(a.state_label(0), "000");
        assert_eq!(dot.matches("q0 -> ").count(), 3);
        assert_eq!(parse_dot(&dot).unwrap(), a.transition_table());
        assert_eq!(a.to_dot(), dot);
    }
}
