use super::graph_product::ProductGraph;
use super::GeneratorError;

/// A generator or, for infinite-order generators, its inverse. Letters order by
/// generator and then `s < s⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    fn cancels(self, other: Letter, graph: &ProductGraph) -> bool {
        self.gen == other.gen && (graph.is_involution(self.gen) || self.inv != other.inv)
    }
}

/// Shortlex-least reduced word for a group element.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalWord {
    letters: Vec<Letter>,
}

impl NormalWord {
    pub fn identity() -> Self {
        NormalWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The normal form of `self · s`.
    pub fn times(&self, s: Letter, graph: &ProductGraph) -> NormalWord {
        let mut letters = self.letters.clone();
        push_reduced(&mut letters, s, graph);
        NormalWord { letters: shortlex(letters, graph) }
    }

    /// `()` for the identity, otherwise letters joined by `.`, inverses as `s^-1`.
    pub fn render(&self, graph: &ProductGraph) -> String {
        if self.letters.is_empty() {
            return "()".to_string();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let name = graph.name(l.gen);
                if l.inv {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect();
        parts.join(".")
    }
}

/// Appends `s` to a reduced word, keeping it reduced: `s` is cancelled against the
/// last letter of its generator if only commuting letters lie in between.
fn push_reduced(word: &mut Vec<Letter>, s: Letter, graph: &ProductGraph) {
    for i in (0..word.len()).rev() {
        let w = word[i];
        if w.gen == s.gen {
            if w.cancels(s, graph) {
                word.remove(i);
                return;
            }
            break;
        }
        if !graph.commute(w.gen, s.gen) {
            break;
        }
    }
    word.push(s);
}

/// Lexicographically least rearrangement of a reduced word under commutations:
/// repeatedly take the least letter that commutes past everything before it.
fn shortlex(mut rest: Vec<Letter>, graph: &ProductGraph) -> Vec<Letter> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            let movable = rest[..i].iter().all(|p| p.gen != rest[i].gen && graph.commute(p.gen, rest[i].gen));
            if movable && best.is_none_or(|b| rest[i] < rest[b]) {
                best = Some(i);
            }
        }
        out.push(rest.remove(best.expect("the first letter is always movable")));
    }
    out
}

/// Normal form of an arbitrary word.
pub fn normal_form(word: &[Letter], graph: &ProductGraph) -> Result<NormalWord, GeneratorError> {
    let mut letters = Vec::with_capacity(word.len());
    for &s in word {
        if s.gen >= graph.len() {
            return Err(GeneratorError::UnknownGenerator(format!("#{}", s.gen)));
        }
        let s = if graph.is_involution(s.gen) { Letter::new(s.gen, false) } else { s };
        push_reduced(&mut letters, s, graph);
    }
    Ok(NormalWord { letters: shortlex(letters, graph) })
}

/// Reads a word: tokens separated by `.` or whitespace, each a generator name with
/// optional `^-1`. A token that is not a generator is read letter by letter, so
/// `aba` works for one-character generator names. `()` and the empty string are
/// the identity.
pub fn parse_word(text: &str, graph: &ProductGraph) -> Result<Vec<Letter>, GeneratorError> {
    let mut out = Vec::new();
    for token in text.split(|c: char| c == '.' || c.is_whitespace()).filter(|t| !t.is_empty() && *t != "()") {
        let (name, inv) = match token.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (token, false),
        };
        if let Some(g) = graph.index(name) {
            out.push(Letter::new(g, inv));
            continue;
        }
        let chars: Vec<String> = name.chars().map(String::from).collect();
        let gens: Option<Vec<usize>> = chars.iter().map(|c| graph.index(c)).collect();
        match gens {
            Some(gs) if !gs.is_empty() => {
                let last = gs.len() - 1;
                out.extend(gs.into_iter().enumerate().map(|(i, g)| Letter::new(g, inv && i == last)));
            }
            _ => return Err(GeneratorError::UnknownGenerator(name.to_string())),
        }
    }
    Ok(out)
}
