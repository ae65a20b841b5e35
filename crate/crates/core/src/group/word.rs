use super::{inverse_name, Group, GroupError, GroupId};
use serde::{Deserialize, Serialize};

/// One letter of a word: a generator index into the group's alphabet and an
/// inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A free word over a group's alphabet. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub group: GroupId,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new<G: Group + ?Sized>(group: &G, letters: Vec<Letter>) -> Result<Self, GroupError> {
        let n = group.alphabet().len();
        if let Some(l) = letters.iter().find(|l| l.generator >= n) {
            return Err(GroupError::UnknownGenerator(format!("#{}", l.generator)));
        }
        Ok(Word {
            group: group.id(),
            letters,
        })
    }

    /// Parses the CLI syntax. Tokens are separated by `.`, `,`, `*` or
    /// whitespace; single-character alphabets may also be written run
    /// together (`abAB`). `e` and the empty string denote the identity.
    pub fn parse<G: Group + ?Sized>(group: &G, s: &str) -> Result<Self, GroupError> {
        let alphabet = group.alphabet();
        let mut table: Vec<(String, Vec<Letter>)> = Vec::new();
        for (i, g) in alphabet.iter().enumerate() {
            let plain = Letter {
                generator: i,
                inverse: false,
            };
            let inv = Letter {
                generator: i,
                inverse: true,
            };
            table.push((g.name.clone(), vec![plain]));
            table.push((inverse_name(&g.name), vec![inv]));
            for k in 2..=3 {
                table.push((format!("{}{}", g.name, k), vec![plain; k]));
            }
        }
        let single = alphabet.iter().all(|g| g.name.chars().count() == 1);
        let mut letters = Vec::new();
        for tok in s
            .split(|c: char| c == '.' || c == ',' || c == '*' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            if tok == "e" {
                continue;
            }
            if let Some((_, ls)) = table.iter().find(|(name, _)| name == tok) {
                letters.extend_from_slice(ls);
                continue;
            }
            if let Some((name, exp)) = tok.split_once('^') {
                let k: i64 = exp
                    .parse()
                    .map_err(|_| GroupError::UnknownGenerator(tok.to_string()))?;
                let i = alphabet
                    .iter()
                    .position(|g| g.name == name)
                    .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
                let l = Letter {
                    generator: i,
                    inverse: k < 0,
                };
                letters.extend(std::iter::repeat(l).take(k.unsigned_abs() as usize));
                continue;
            }
            if single {
                for c in tok.chars() {
                    let c = c.to_string();
                    match table.iter().find(|(name, _)| *name == c) {
                        Some((_, ls)) => letters.extend_from_slice(ls),
                        None => return Err(GroupError::UnknownGenerator(c)),
                    }
                }
                continue;
            }
            return Err(GroupError::UnknownGenerator(tok.to_string()));
        }
        Ok(Word {
            group: group.id(),
            letters,
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            group: self.group,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            group: self.group,
            letters,
        }
    }
}
