//! Serializable output records.

use num_bigint::BigInt;

/// One computed result, serialized as a single JSON or CSV line.
///
/// The JSON field order is a compatibility contract:
/// `{"n":…,"k":…,"l":…,"m":…,"method":"…","torsion":[…],"free_rank":…,"order":"…","trees":"…"}`
/// with `order` and `trees` as decimal strings (they outgrow 64 bits almost
/// immediately) and the torsion factors as JSON numbers of unbounded size
/// (readers must parse with arbitrary precision, as [`from_json`] does).
/// CSV rows carry the same fields in the same order, with the torsion list
/// joined by `;`. The jumps are stored normalized into 1..n−1, naming the
/// graph rather than the command line that produced it.
///
/// `elapsed_ms` is diagnostic only: never serialized, ignored by equality,
/// reported on the stderr channel — data rows stay byte-identical across
/// runs.
///
/// [`from_json`]: OutputRecord::from_json
#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub m: u64,
    pub method: String,
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
    pub order: BigInt,
    pub trees: BigInt,
    pub elapsed_ms: u128,
}

impl PartialEq for OutputRecord {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.l == other.l
            && self.m == other.m
            && self.method == other.method
            && self.torsion == other.torsion
            && self.free_rank == other.free_rank
            && self.order == other.order
            && self.trees == other.trees
    }
}

impl Eq for OutputRecord {}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        let torsion = self
            .torsion
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"n\":{},\"k\":{},\"l\":{},\"m\":{},\"method\":\"{}\",\"torsion\":[{}],\"free_rank\":{},\"order\":\"{}\",\"trees\":\"{}\"}}",
            self.n,
            self.k,
            self.l,
            self.m,
            self.method,
            torsion,
            self.free_rank,
            self.order,
            self.trees
        )
    }

    pub fn to_csv(&self) -> String {
        let torsion = self
            .torsion
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.l,
            self.m,
            self.method,
            torsion,
            self.free_rank,
            self.order,
            self.trees
        )
    }

    /// Parses a JSON record emitted by [`to_json`]. Unknown keys are
    /// tolerated (sweep rows carry extras), so this also reads those.
    ///
    /// [`to_json`]: OutputRecord::to_json
    pub fn from_json(line: &str) -> Result<OutputRecord, String> {
        let value: serde_json::Value =
            serde_json::from_str(line).map_err(|e| format!("invalid JSON: {e}"))?;
        let object = value.as_object().ok_or("record must be a JSON object")?;
        let small_int = |key: &str| -> Result<u64, String> {
            object
                .get(key)
                .and_then(serde_json::Value::as_u64)
                .ok_or_else(|| format!("missing or non-integer field `{key}`"))
        };
        let string = |key: &str| -> Result<&str, String> {
            object
                .get(key)
                .and_then(serde_json::Value::as_str)
                .ok_or_else(|| format!("missing or non-string field `{key}`"))
        };
        let big = |key: &str| -> Result<BigInt, String> {
            string(key)?
                .parse()
                .map_err(|_| format!("field `{key}` is not a decimal integer"))
        };
        let torsion = object
            .get("torsion")
            .and_then(serde_json::Value::as_array)
            .ok_or("missing or non-array field `torsion`")?
            .iter()
            .map(|entry| match entry {
                serde_json::Value::Number(number) => number
                    .to_string()
                    .parse::<BigInt>()
                    .map_err(|_| format!("non-integer torsion entry {number}")),
                other => Err(format!("non-numeric torsion entry {other}")),
            })
            .collect::<Result<Vec<BigInt>, String>>()?;
        Ok(OutputRecord {
            n: small_int("n")?,
            k: small_int("k")?,
            l: small_int("l")?,
            m: small_int("m")?,
            method: string("method")?.to_string(),
            torsion,
            free_rank: small_int("free_rank")? as usize,
            order: big("order")?,
            trees: big("trees")?,
            elapsed_ms: 0,
        })
    }
}

/// A sweep row: the unit-jump record plus the arithmetic invariants that
/// drive the closed form. Serialized as the base record with `nu` (decimal
/// string) and `mu` appended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub record: OutputRecord,
    pub nu: BigInt,
    pub mu: u64,
}

impl SweepRecord {
    pub fn to_json(&self) -> String {
        let base = self.record.to_json();
        format!(
            "{},\"nu\":\"{}\",\"mu\":{}}}",
            &base[..base.len() - 1],
            self.nu,
            self.mu
        )
    }

    pub fn to_csv(&self) -> String {
        format!("{},{},{}", self.record.to_csv(), self.nu, self.mu)
    }
}
