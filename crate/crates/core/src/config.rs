//! Line-oriented `key = value` configuration files.
//!
//! ```text
//! # ⟨2,3⟩ with explicit bounds
//! kind = numerical
//! params = 2, 3
//! generators = 2; 3
//! depth = 3
//! ```
//!
//! Blank lines and `#` comments are ignored. Keys may appear at most once.

use std::path::Path;

use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, SemigroupKind};
use crate::DEFAULT_SEED;

/// Sizes and seed shared by all analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Steps of the constructible-ideal closure.
    pub depth: usize,
    /// Letter pairs in enumerated hull words.
    pub length: usize,
    /// Elements in operator windows.
    pub window: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { depth: 2, length: 2, window: 30, seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub kind: SemigroupKind,
    /// Declared generators as written, if overridden.
    pub generators: Option<Vec<(usize, String)>>,
    pub bounds: Bounds,
}

const KEYS: [&str; 9] = ["kind", "params", "generators", "identity", "depth", "length", "window", "seed", "bounds"];

fn err(line: usize, field: &str, message: impl Into<String>) -> Error {
    Error::Config { line, field: field.to_string(), message: message.into() }
}

fn parse_num<T: std::str::FromStr>(line: usize, field: &str, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| err(line, field, format!("expected a nonnegative integer, got `{}`", s.trim())))
}

fn parse_list(line: usize, field: &str, s: &str) -> Result<Vec<u64>> {
    s.split([',', ' ', '\t'])
        .filter(|x| !x.is_empty())
        .map(|x| parse_num(line, field, x))
        .collect()
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| err(0, "file", format!("cannot read {}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config> {
        let mut seen: Vec<(&str, usize, &str)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(line, content, "expected `key = value`"))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(err(line, key, format!("unknown key; expected one of {}", KEYS.join(", "))));
            }
            if let Some((_, first, _)) = seen.iter().find(|(k, ..)| *k == key) {
                return Err(err(line, key, format!("duplicate key, first set on line {first}")));
            }
            seen.push((key, line, value.trim()));
        }
        let get = |key: &str| seen.iter().find(|(k, ..)| *k == key).map(|&(_, l, v)| (l, v));

        let (kind_line, kind) = get("kind").ok_or_else(|| err(0, "kind", "missing required key"))?;
        let params = get("params");
        let need_params = |what: &str| {
            params.ok_or_else(|| err(kind_line, "params", format!("kind `{kind}` needs {what}")))
        };
        let kind = match kind {
            "free" => {
                let (l, v) = need_params("an alphabet size")?;
                SemigroupKind::FreeMonoid { alphabet: parse_num(l, "params", v)? }
            }
            "cone" => {
                let (l, v) = need_params("a dimension")?;
                SemigroupKind::PositiveCone { dimension: parse_num(l, "params", v)? }
            }
            "naturals" => SemigroupKind::PositiveCone { dimension: 1 },
            "numerical" => {
                let (l, v) = need_params("a generator list")?;
                let generators = parse_list(l, "params", v)?;
                if generators.is_empty() {
                    return Err(err(l, "params", "generator list is empty"));
                }
                SemigroupKind::Numerical { generators }
            }
            "axb" => {
                if let Some((l, v)) = params.filter(|(_, v)| !v.is_empty()) {
                    return Err(err(l, "params", format!("kind `axb` takes no parameters, got `{v}`")));
                }
                SemigroupKind::AxPlusB
            }
            "table" => {
                let (l, v) = need_params("table rows separated by `;`")?;
                let rows = v
                    .split(';')
                    .map(|r| parse_list(l, "params", r).map(|r| r.into_iter().map(|x| x as usize).collect()))
                    .collect::<Result<Vec<Vec<usize>>>>()?;
                let identity = get("identity").map(|(l, v)| parse_num(l, "identity", v)).transpose()?;
                SemigroupKind::FiniteTable { rows, identity }
            }
            other => {
                return Err(err(
                    kind_line,
                    "kind",
                    format!("unknown kind `{other}`; expected free, cone, naturals, numerical, axb or table"),
                ))
            }
        };
        if let (Some((l, _)), false) = (get("identity"), matches!(kind, SemigroupKind::FiniteTable { .. })) {
            return Err(err(l, "identity", "only table semigroups take an identity index"));
        }

        let mut bounds = Bounds::default();
        if let Some((l, v)) = get("bounds") {
            for part in v.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (k, x) = part
                    .split_once(':')
                    .ok_or_else(|| err(l, "bounds", format!("expected `name: value`, got `{part}`")))?;
                bounds.set(l, k.trim(), x)?;
            }
        }
        for key in ["depth", "length", "window", "seed"] {
            if let Some((l, v)) = get(key) {
                bounds.set(l, key, v)?;
            }
        }

        let generators = get("generators").map(|(l, v)| {
            v.split(';').map(str::trim).filter(|g| !g.is_empty()).map(|g| (l, g.to_string())).collect()
        });
        Ok(Config { kind, generators, bounds })
    }

    /// Builds the semigroup and applies the generator override.
    pub fn semigroup(&self) -> Result<Semigroup> {
        let sg = Semigroup::new(self.kind.clone())?;
        let Some(gens) = &self.generators else { return Ok(sg) };
        let mut parsed = Vec::new();
        for (line, g) in gens {
            let x = sg
                .parse_element(g)
                .ok_or_else(|| err(*line, "generators", format!("`{g}` is not an element of {}", sg.name())))?;
            parsed.push(x);
        }
        if parsed.is_empty() {
            return Err(err(gens.first().map_or(0, |g| g.0), "generators", "empty generator list"));
        }
        sg.with_generators(parsed)
    }
}

impl Bounds {
    fn set(&mut self, line: usize, key: &str, value: &str) -> Result<()> {
        match key {
            "depth" => self.depth = parse_num(line, key, value)?,
            "length" => self.length = parse_num(line, key, value)?,
            "window" => self.window = parse_num(line, key, value)?,
            "seed" => self.seed = parse_num(line, key, value)?,
            _ => return Err(err(line, "bounds", format!("unknown bound `{key}`"))),
        }
        if key == "window" && self.window == 0 {
            return Err(err(line, key, "window must be positive"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::SemigroupElement;

    #[test]
    fn numerical_config() {
        let c = Config::parse("# comment\nkind = numerical\nparams = 2, 3\ndepth = 3\n").unwrap();
        assert_eq!(c.kind, SemigroupKind::Numerical { generators: vec![2, 3] });
        assert_eq!(c.bounds.depth, 3);
        assert_eq!(c.bounds.length, 2);
        assert_eq!(c.semigroup().unwrap().name(), "<2,3>");
    }

    #[test]
    fn table_config() {
        let c = Config::parse("kind = table\nparams = 0 1 2; 1 2 0; 2 0 1\nidentity = 0").unwrap();
        let sg = c.semigroup().unwrap();
        assert_eq!(sg.name(), "FiniteTable(3)");
    }

    #[test]
    fn generator_override() {
        let c = Config::parse("kind = axb\ngenerators = (1,1); (0,2)\nbounds = depth: 1, window: 12").unwrap();
        let sg = c.semigroup().unwrap();
        assert_eq!(sg.generators(), &[SemigroupElement::Affine(1, 1), SemigroupElement::Affine(0, 2)]);
        assert_eq!((c.bounds.depth, c.bounds.window), (1, 12));
    }

    #[test]
    fn errors_name_line_and_field() {
        let e = Config::parse("kind = free\nparams = x\n").unwrap_err();
        assert_eq!(e, err(2, "params", "expected a nonnegative integer, got `x`"));
        let e = Config::parse("kind = cone\nparams = 2\nwidth = 3\n").unwrap_err();
        assert!(matches!(e, Error::Config { line: 3, ref field, .. } if field == "width"));
        let e = Config::parse("params = 2\n").unwrap_err();
        assert!(matches!(e, Error::Config { ref field, .. } if field == "kind"));
        let e = Config::parse("kind = free\nparams = 2\nkind = cone\n").unwrap_err();
        assert!(matches!(e, Error::Config { line: 3, .. }));
        let e = Config::parse("kind = free\nparams = 2\ngenerators = c\n").unwrap().semigroup().unwrap_err();
        assert!(matches!(e, Error::Config { line: 3, ref field, .. } if field == "generators"));
        let e = Config::parse("kind = blob\n").unwrap_err();
        assert!(matches!(e, Error::Config { line: 1, ref field, .. } if field == "kind"));
        let e = Config::parse("kind = table\nparams = 0 0; 1 0\n").unwrap().semigroup().unwrap_err();
        assert!(e.to_string().contains("not left cancellative"), "{e}");
    }
}
