use super::{Field, FieldSpec, FrobeniusAut};
use crate::error::{Error, Result};

/// Splits `key=value` lines. Blank lines and `#` comments are skipped.
pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{l}`")))
        })
        .collect()
}

/// A field block: `p`, `e`, `d`, `modpoly`, `primitive`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    pub spec: FieldSpec,
    /// σ = p^e-Frobenius.
    pub e: u32,
}

impl FieldConfig {
    pub fn field(&self) -> Field {
        Field::new(self.spec.clone())
    }

    pub fn automorphism(&self) -> Result<FrobeniusAut> {
        FrobeniusAut::new(&self.field(), self.e)
    }

    /// Reads the field keys from `pairs` and ignores anything else.
    pub fn from_pairs(pairs: &[(String, String)]) -> Result<Self> {
        let get = |key: &str| {
            pairs
                .iter()
                .rev()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
        };
        let num = |key: &str| -> Result<Option<u32>> {
            get(key)
                .map(|v| {
                    v.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("`{key}` must be an integer")))
                })
                .transpose()
        };
        let p = num("p")?.ok_or_else(|| Error::Parse("missing `p`".into()))?;
        let modpoly = get("modpoly")
            .ok_or_else(|| Error::Parse("missing `modpoly`".into()))?
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad modpoly coefficient `{c}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let primitive = match get("primitive") {
            None | Some("false") => false,
            Some("true") => true,
            Some(v) => {
                return Err(Error::Parse(format!(
                    "`primitive` must be true or false, got `{v}`"
                )))
            }
        };
        let spec = FieldSpec::new(p, modpoly, primitive)?;
        if let Some(d) = num("d")? {
            if d != spec.degree() {
                return Err(Error::Parse(format!(
                    "d={d} but modpoly has degree {}",
                    spec.degree()
                )));
            }
        }
        let e = num("e")?.unwrap_or(1);
        FrobeniusAut::new(&Field::new(spec.clone()), e)?;
        Ok(FieldConfig { spec, e })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_pairs(&parse_key_values(text)?)
    }

    pub fn to_text(&self) -> String {
        let modpoly: Vec<String> = self.spec.modpoly().iter().map(|c| c.to_string()).collect();
        format!(
            "p={}\ne={}\nd={}\nmodpoly={}\nprimitive={}\n",
            self.spec.p(),
            self.e,
            self.spec.degree(),
            modpoly.join(","),
            self.spec.is_primitive()
        )
    }
}
