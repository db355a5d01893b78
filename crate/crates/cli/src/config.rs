//! `key = value` configuration files.
//!
//! ```text
//! # defaults for verify
//! box = 8,12
//! k = 4
//! imax = 2
//! format = json
//! suite = elements.txt
//! max_growth = 8
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use weyl_dixmier::oracle::TruncationBox;

use crate::Format;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub format: Option<Format>,
    pub bx: Option<TruncationBox>,
    pub k: Option<u64>,
    pub imax: Option<u64>,
    pub suite: Option<PathBuf>,
    pub max_growth: Option<usize>,
}

fn value<T: std::str::FromStr>(key: &str, v: &str, line: usize) -> Result<T, String> {
    v.parse()
        .map_err(|_| format!("line {line}: bad value {v:?} for {key}"))
}

impl Config {
    pub fn parse(text: &str, base: &Path) -> Result<Config, String> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let n = i + 1;
            let (key, v) = line
                .split_once('=')
                .ok_or_else(|| format!("line {n}: expected key = value"))?;
            let (key, v) = (key.trim(), v.trim());
            match key {
                "format" => cfg.format = Some(value(key, v, n)?),
                "box" => cfg.bx = Some(value(key, v, n)?),
                "k" => cfg.k = Some(value(key, v, n)?),
                "imax" => cfg.imax = Some(value(key, v, n)?),
                "max_growth" => cfg.max_growth = Some(value(key, v, n)?),
                // relative suite paths are taken from the config file's directory
                "suite" => cfg.suite = Some(base.join(v)),
                _ => return Err(format!("line {n}: unknown key {key:?}")),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Config::parse(&text, base).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let text = "# comment\nbox = 3,4\nk=2\nimax = 5 # trailing\nformat = json\nsuite = s.txt\nmax_growth = 1\n";
        let cfg = Config::parse(text, Path::new("/cfg")).unwrap();
        assert_eq!(cfg.bx, Some(TruncationBox::new(3, 4)));
        assert_eq!(cfg.k, Some(2));
        assert_eq!(cfg.imax, Some(5));
        assert_eq!(cfg.format, Some(Format::Json));
        assert_eq!(cfg.suite, Some(PathBuf::from("/cfg/s.txt")));
        assert_eq!(cfg.max_growth, Some(1));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(Config::parse("colour = red", Path::new(".")).is_err());
        assert!(Config::parse("k = many", Path::new(".")).is_err());
        assert!(Config::parse("box", Path::new(".")).is_err());
    }
}
