use pyo3::prelude::*;
use pyo3::types::PyDict;

use tensordim_py::tensordim_module;

#[test]
fn module_works_inside_an_embedded_interpreter() {
    pyo3::append_to_inittab!(tensordim_module);
    Python::initialize();
    Python::attach(|py| {
        let locals = PyDict::new(py);
        py.run(
            cr#"
import json
import tensordim

a = tensordim.Algebra(json.dumps({"base": {"kind": "Zmod", "n": 4}, "vars": ["x"], "relations": []}))
b = tensordim.Algebra(json.dumps({"base": {"kind": "Zmod", "n": 6}, "vars": ["y"], "relations": []}))
report = tensordim.dim_tensor(a, b)
dims = (a.dim_at(2), report["formula_dim"], report["oracle_dim"], report["agreement"])
lex = tensordim.Algebra(a.to_json(), order="lex")
same = lex == a
try:
    a.dim_at(5)
    raised = False
except tensordim.TensordimError:
    raised = True
"#,
            None,
            Some(&locals),
        )
        .unwrap();
        let dims: (u64, u64, u64, bool) = locals.get_item("dims").unwrap().unwrap().extract().unwrap();
        assert_eq!(dims, (1, 2, 2, true));
        let raised: bool = locals.get_item("raised").unwrap().unwrap().extract().unwrap();
        assert!(raised);
        let same: bool = locals.get_item("same").unwrap().unwrap().extract().unwrap();
        assert!(!same, "monomial order is part of the presentation");
    });
}
