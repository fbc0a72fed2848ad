//! Per-root-system memo tables. Entries are pure functions of their keys, so
//! concurrent inserts of the same key always carry identical values.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::laurent::LaurentPoly;
use crate::rootsys::Weight;

pub(crate) type Terms = BTreeMap<Weight, LaurentPoly>;

#[derive(Default)]
pub(crate) struct Memo {
    pub straighten: Mutex<HashMap<Weight, Arc<Terms>>>,
    pub partition: Mutex<HashMap<(Vec<i64>, usize), LaurentPoly>>,
    /// AJ coordinates of canonical elements.
    pub canonical: Mutex<HashMap<Weight, Arc<Terms>>>,
    pub r_columns: Mutex<HashMap<Weight, Arc<Terms>>>,
}
