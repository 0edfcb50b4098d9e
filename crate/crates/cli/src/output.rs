//! JSON and CSV renderings.

use cyclicity_core::arith::{to_decimal, Rounding};
use cyclicity_core::formulas::Counts;
use cyclicity_core::oracle::{CayleyGroup, SubgroupLattice};
use cyclicity_core::{ExactRatio, Provenance};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

impl From<&ExactRatio> for Fraction {
    fn from(r: &ExactRatio) -> Self {
        Fraction { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

/// One computed cyclicity degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: Vec<Value>,
    pub num_cyclic: String,
    pub num_subgroups: String,
    pub cdeg: Fraction,
    pub cdeg_decimal: String,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ndeg: Option<Fraction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sd: Option<Fraction>,
}

impl OutputRecord {
    pub fn new(family: &str, params: Vec<Value>, counts: &Counts, provenance: Provenance) -> Self {
        let cdeg = counts.cdeg();
        OutputRecord {
            family: family.to_string(),
            params,
            num_cyclic: counts.num_cyclic.to_string(),
            num_subgroups: counts.num_subgroups.to_string(),
            cdeg: Fraction::from(&cdeg),
            cdeg_decimal: to_decimal(&cdeg, 6, Rounding::HalfEven),
            provenance: provenance.as_str().to_string(),
            ndeg: None,
            sd: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        let params: Vec<String> = self.params.iter().map(value_text).collect();
        let mut out = format!(
            "family: {}\nparams: {}\n|C| = {}\n|L| = {}\ncdeg = {}/{} ({})\n",
            self.family,
            params.join(" "),
            self.num_cyclic,
            self.num_subgroups,
            self.cdeg.num,
            self.cdeg.den,
            self.cdeg_decimal
        );
        if let Some(f) = &self.ndeg {
            out += &format!("ndeg = {}/{}\n", f.num, f.den);
        }
        if let Some(f) = &self.sd {
            out += &format!("sd = {}/{}\n", f.num, f.den);
        }
        out += &format!("provenance: {}\n", self.provenance);
        out
    }

    pub const CSV_HEADER: &'static str =
        "family,params,num_cyclic,num_subgroups,cdeg_num,cdeg_den,cdeg_decimal,provenance";

    pub fn to_csv_row(&self) -> String {
        let params: Vec<String> = self.params.iter().map(value_text).collect();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family,
            csv_field(&params.join(" ")),
            self.num_cyclic,
            self.num_subgroups,
            self.cdeg.num,
            self.cdeg.den,
            self.cdeg_decimal,
            self.provenance
        )
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Quotes a CSV field if it contains a separator or quote.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Serialize)]
struct DumpSubgroup {
    order: usize,
    cyclic: bool,
    normal: bool,
    generators: Vec<usize>,
    elements: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct LatticeDump<'a> {
    group: String,
    order: usize,
    element_names: Option<&'a [String]>,
    num_subgroups: usize,
    num_cyclic: usize,
    num_normal: usize,
    subgroups: Vec<DumpSubgroup>,
}

/// The full subgroup lattice as JSON. Elements are indices into
/// `element_names`.
pub fn lattice_json(spec: &str, group: &CayleyGroup, lattice: &SubgroupLattice) -> String {
    let dump = LatticeDump {
        group: spec.to_string(),
        order: group.order(),
        element_names: group.element_names(),
        num_subgroups: lattice.len(),
        num_cyclic: lattice.num_cyclic(),
        num_normal: lattice.num_normal(),
        subgroups: lattice
            .subgroups()
            .iter()
            .map(|s| DumpSubgroup {
                order: s.order(),
                cyclic: s.is_cyclic(),
                normal: s.is_normal(),
                generators: s.generators().collect(),
                elements: s.elements(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&dump).expect("serializable") + "\n"
}
