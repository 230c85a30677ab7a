//! Advisory on-disk cache of tilde pairs: one line per pair,
//! `path<TAB>alpha<TAB>beta`, validated on load by replaying each entry from
//! its parent.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use lagrange3::words::{pair_step, parse_ops, AbWord, Renorm, WordPair};

#[derive(Default)]
pub struct PairCache {
    entries: BTreeMap<String, (AbWord, AbWord)>,
    dirty: bool,
}

fn path_key(ops: &[Renorm]) -> String {
    ops.iter()
        .map(|o| match o {
            Renorm::U => 'U',
            Renorm::V => 'V',
        })
        .collect()
}

impl PairCache {
    /// Load and validate; invalid or stale lines are dropped silently (the
    /// cache is advisory).
    pub fn load(path: &Path) -> PairCache {
        let mut cache = PairCache::default();
        let Ok(text) = fs::read_to_string(path) else {
            return cache;
        };
        let mut raw: BTreeMap<String, (AbWord, AbWord)> = BTreeMap::new();
        for line in text.lines() {
            let mut fields = line.split('\t');
            let (Some(path), Some(alpha), Some(beta)) =
                (fields.next(), fields.next(), fields.next())
            else {
                continue;
            };
            let (Ok(ops), Ok(alpha), Ok(beta)) = (
                parse_ops(path),
                alpha.parse::<AbWord>(),
                beta.parse::<AbWord>(),
            ) else {
                continue;
            };
            raw.insert(path_key(&ops), (alpha, beta));
        }
        // validate in key order (parents sort before children only within a
        // branch, so walk by length)
        let mut keys: Vec<String> = raw.keys().cloned().collect();
        keys.sort_by_key(|k| k.len());
        for key in keys {
            let (alpha, beta) = raw[&key].clone();
            let valid = if key.is_empty() {
                let root = WordPair::tilde_root();
                alpha == root.alpha && beta == root.beta
            } else {
                let (parent_key, last) = key.split_at(key.len() - 1);
                let op = if last == "U" { Renorm::U } else { Renorm::V };
                match cache.entries.get(parent_key) {
                    Some((pa, pb)) => {
                        let parent = WordPair {
                            alpha: pa.clone(),
                            beta: pb.clone(),
                            path: Vec::new(),
                            family: lagrange3::words::PairFamily::Tilde,
                        };
                        let next = pair_step(&parent, op);
                        next.alpha == alpha && next.beta == beta
                    }
                    // no parent on file: accept only after replaying from
                    // the root
                    None => {
                        let ops = parse_ops(&key).unwrap();
                        let direct = lagrange3::words::tilde_pair(&ops);
                        direct.alpha == alpha && direct.beta == beta
                    }
                }
            };
            if valid {
                cache.entries.insert(key, (alpha, beta));
            }
        }
        cache
    }

    #[allow(dead_code)]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Pair for an operator word, reusing the deepest cached ancestor.
    pub fn tilde_pair(&mut self, ops: &[Renorm]) -> WordPair {
        let mut depth = ops.len();
        loop {
            let key = path_key(&ops[..depth]);
            if let Some((alpha, beta)) = self.entries.get(&key) {
                let mut pair = WordPair {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    path: ops[..depth].to_vec(),
                    family: lagrange3::words::PairFamily::Tilde,
                };
                for &op in &ops[depth..] {
                    pair = pair_step(&pair, op);
                    self.insert(&pair);
                }
                return pair;
            }
            if depth == 0 {
                break;
            }
            depth -= 1;
        }
        let mut pair = WordPair::tilde_root();
        self.insert(&pair);
        for &op in ops {
            pair = pair_step(&pair, op);
            self.insert(&pair);
        }
        pair
    }

    pub fn insert(&mut self, pair: &WordPair) {
        let key = path_key(&pair.path);
        if let std::collections::btree_map::Entry::Vacant(e) = self.entries.entry(key) {
            e.insert((pair.alpha.clone(), pair.beta.clone()));
            self.dirty = true;
        }
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let mut out = String::new();
        for (key, (alpha, beta)) in &self.entries {
            out.push_str(&format!("{key}\t{alpha}\t{beta}\n"));
        }
        fs::write(path, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_validation() {
        let dir = std::env::temp_dir().join("lagrange3-cache-test");
        let _ = fs::create_dir_all(&dir);
        let file = dir.join("pairs.tsv");
        let _ = fs::remove_file(&file);

        let mut cache = PairCache::load(&file);
        let ops = parse_ops("UV").unwrap();
        let pair = cache.tilde_pair(&ops);
        assert!(!pair.alpha.to_string().is_empty());
        cache.save(&file).unwrap();

        let reloaded = PairCache::load(&file);
        assert_eq!(reloaded.len(), cache.len());

        // corrupt one line: it must be dropped on load
        let mut text = fs::read_to_string(&file).unwrap();
        text.push_str("UVU\taaaa\tbbbb\n");
        fs::write(&file, &text).unwrap();
        let reloaded = PairCache::load(&file);
        assert_eq!(reloaded.len(), cache.len());
    }
}
