use crate::alphabet::Alphabet;
use crate::error::{Error, Result, SetKind};
use crate::observer::{Boundary, Observer};

/// One `(f, g)` pair over fixed state, input and output sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTable {
    pub transition: Vec<usize>,
    pub output_map: Vec<usize>,
}

/// A finite family of rule tables plus the rule that picks the next active
/// table from `(active index, state, input)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleFamily {
    pub tables: Vec<RuleTable>,
    /// Indexed `(k * |X| + x) * |Y| + y`.
    pub meta_update: Vec<usize>,
}

impl RuleFamily {
    /// Takes the tables of observers sharing the same sets (by label and
    /// order); `meta` gives the next table index.
    pub fn from_observers(
        observers: &[Observer],
        meta: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let first = observers
            .first()
            .ok_or_else(|| Error::Construction("rule family must not be empty".into()))?;
        if let Some(o) = observers.iter().find(|o| {
            o.states() != first.states() || o.inputs() != first.inputs() || o.outputs() != first.outputs()
        }) {
            return Err(Error::Construction(format!(
                "rule tables disagree on sets: {:?} vs {:?}",
                o.states().labels(),
                first.states().labels()
            )));
        }
        let (nx, ny) = (first.num_states(), first.num_inputs());
        let mut meta_update = Vec::with_capacity(observers.len() * nx * ny);
        for k in 0..observers.len() {
            for x in 0..nx {
                for y in 0..ny {
                    meta_update.push(meta(k, x, y));
                }
            }
        }
        Ok(RuleFamily {
            tables: observers
                .iter()
                .map(|o| RuleTable {
                    transition: o.transition_table().to_vec(),
                    output_map: o.output_table().to_vec(),
                })
                .collect(),
            meta_update,
        })
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }
}

/// An observer that switches among its own rule tables.
///
/// States are `[x@k]` pairs (base state, active table), base-major. On input
/// `y` from `(x, k)` it moves to `(f_k(x, y), m(k, x, y))`; the output of
/// `(x, k)` is `g_k(x)`.
pub fn second_order_wrap(
    states: &Alphabet,
    inputs: &Alphabet,
    outputs: &Alphabet,
    family: &RuleFamily,
) -> Result<Observer> {
    if family.is_empty() {
        return Err(Error::Construction("rule family must not be empty".into()));
    }
    let (nx, ny, nz, nk) = (states.len(), inputs.len(), outputs.len(), family.len());
    for (k, t) in family.tables.iter().enumerate() {
        if t.transition.len() != nx * ny
            || t.output_map.len() != nx
            || t.transition.iter().any(|&s| s >= nx)
            || t.output_map.iter().any(|&z| z >= nz)
        {
            return Err(Error::Construction(format!("rule table {k} is not total over the base sets")));
        }
    }
    if family.meta_update.len() != nk * nx * ny || family.meta_update.iter().any(|&k| k >= nk) {
        return Err(Error::Construction("meta update is not total".into()));
    }

    let wrapped_states = Alphabet::new(
        SetKind::State,
        states
            .labels()
            .iter()
            .flat_map(|x| (0..nk).map(move |k| format!("[{x}@{k}]"))),
    )?;
    let pair = |x: usize, k: usize| x * nk + k;
    let mut transition = Vec::with_capacity(nx * nk * ny);
    let mut output_map = Vec::with_capacity(nx * nk);
    for x in 0..nx {
        for k in 0..nk {
            let table = &family.tables[k];
            for y in 0..ny {
                let x2 = table.transition[x * ny + y];
                let k2 = family.meta_update[(k * nx + x) * ny + y];
                transition.push(pair(x2, k2));
            }
            output_map.push(table.output_map[x]);
        }
    }
    Observer::from_tables(
        wrapped_states,
        inputs.clone(),
        outputs.clone(),
        transition,
        output_map,
        Boundary::new("base observer and its active rule index inside"),
    )
}
