#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "blockmoments/analysis.hpp"
#include "blockmoments/cli.hpp"
#include "blockmoments/closedform.hpp"
#include "blockmoments/formal.hpp"
#include "blockmoments/oracle.hpp"
#include "blockmoments/presentation.hpp"

namespace py = pybind11;

namespace {

using namespace blockmoments;

py::int_ to_py_int(const BigInt& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(digits.c_str(), nullptr, 10));
}

BigInt to_bigint(const py::int_& value) {
  return BigInt(py::str(value).cast<std::string>());
}

Order to_order(const std::optional<unsigned>& n) {
  return n ? Order::finite(*n) : Order::infinite();
}

py::object from_order(const Order& order) {
  if (!order.is_finite()) return py::none();
  return py::int_(order.value());
}

using PyLetters = std::vector<std::pair<std::string, int>>;

Word to_word(const PyLetters& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& [name, sign] : letters) {
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("letter sign must be +1 or -1");
    }
    out.push_back({{name}, sign});
  }
  return Word(std::move(out));
}

PyLetters from_word(const Word& w) {
  PyLetters out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    out.emplace_back(l.generator.name, l.sign);
  }
  return out;
}

py::dict from_formal(const FormalSum& a) {
  py::dict out;
  for (const auto& [exponent, value] : a.coefficients()) {
    out[py::int_(exponent)] = to_py_int(value);
  }
  return out;
}

FormalSum to_formal(const py::dict& coeffs) {
  FormalSum out;
  for (const auto& item : coeffs) {
    out.add(item.first.cast<std::int64_t>(),
            to_bigint(py::reinterpret_borrow<py::int_>(item.second)));
  }
  return out;
}

py::dict from_record(const MomentRecord& rec) {
  py::dict out;
  out["m"] = rec.m;
  out["order"] = from_order(rec.order);
  out["closed"] = rec.closed_value ? to_py_int(*rec.closed_value)
                                   : py::object(py::none());
  out["exact"] = rec.exact_value ? to_py_int(*rec.exact_value)
                                 : py::object(py::none());
  out["agree"] = rec.agree ? py::object(py::bool_(*rec.agree))
                           : py::object(py::none());
  if (rec.form) {
    out["case"] = to_string(rec.form->label);
    out["k1"] = rec.form->k1 ? py::object(py::int_(*rec.form->k1))
                             : py::object(py::none());
    out["k2"] = rec.form->k2 ? py::object(py::int_(*rec.form->k2))
                             : py::object(py::none());
  } else {
    out["case"] = py::none();
    out["k1"] = py::none();
    out["k2"] = py::none();
  }
  out["order_one_warning"] = rec.order_one_warning;
  return out;
}

MomentMethod method_from(const std::string& token) {
  const auto method = parse_method(token);
  if (!method) throw std::invalid_argument("unknown method '" + token + "'");
  return *method;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "moments of block operators x + x^-1 attached to group generators";
  m.attr("__version__") = cli::kToolVersion;
  m.attr("ENUMERATION_CAP") = kEnumerationCap;

  py::register_exception<ParseError>(m, "PresentationParseError",
                                     PyExc_ValueError);
  py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded",
                                                 PyExc_OverflowError);

  py::class_<Presentation>(m, "Presentation")
      .def_property_readonly("generators",
                             [](const Presentation& p) {
                               std::vector<std::string> names;
                               for (const auto& g : p.generators) {
                                 names.push_back(g.name);
                               }
                               return names;
                             })
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               std::vector<PyLetters> out;
                               for (const Word& r : p.relators) {
                                 out.push_back(from_word(r));
                               }
                               return out;
                             })
      .def("__eq__",
           [](const Presentation& a, const Presentation& b) { return a == b; })
      .def("__repr__", [](const Presentation& p) { return serialize(p); });

  m.def("parse_presentation",
        [](const std::string& text) { return parse_presentation(text); },
        py::arg("text"));
  m.def("serialize", [](const Presentation& p) { return serialize(p); },
        py::arg("presentation"));
  m.def(
      "detect_order",
      [](const Presentation& p, const std::string& generator) {
        return from_order(detect_power_order(p, {generator}).order);
      },
      py::arg("presentation"), py::arg("generator"),
      "Minimum power-relator exponent for the generator, None if free.");

  m.def("free_reduce",
        [](const PyLetters& w) { return from_word(free_reduce(to_word(w))); },
        py::arg("word"));
  m.def(
      "cyclic_reduce",
      [](const PyLetters& w) { return from_word(cyclic_reduce(to_word(w))); },
      py::arg("word"));
  m.def("invert",
        [](const PyLetters& w) { return from_word(invert(to_word(w))); },
        py::arg("word"));
  m.def("word_text",
        [](const PyLetters& w) { return word_text(to_word(w)); },
        py::arg("word"));

  m.def("expand_block_power",
        [](unsigned m_) { return from_formal(expand_block_power(m_)); },
        py::arg("m"));
  m.def(
      "reduce_mod_order",
      [](const py::dict& a, unsigned n) {
        return from_formal(reduce_mod_order(to_formal(a), n));
      },
      py::arg("coefficients"), py::arg("n"));
  m.def("canonical_trace",
        [](const py::dict& a) { return to_py_int(canonical_trace(to_formal(a))); },
        py::arg("coefficients"));
  m.def("adjoint",
        [](const py::dict& a) { return from_formal(adjoint(to_formal(a))); },
        py::arg("coefficients"));

  m.def("binomial",
        [](unsigned a, unsigned b) { return to_py_int(binomial(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def("central_bracket",
        [](unsigned t) { return to_py_int(central_bracket(t)); },
        py::arg("t"));
  m.def(
      "closed_moment",
      [](unsigned m_, const std::optional<unsigned>& order) {
        const ClosedMoment closed = closed_moment(m_, to_order(order));
        py::dict out;
        out["value"] = to_py_int(closed.value);
        out["case"] = to_string(closed.form.label);
        out["k1"] = closed.form.k1 ? py::object(py::int_(*closed.form.k1))
                                   : py::object(py::none());
        out["k2"] = closed.form.k2 ? py::object(py::int_(*closed.form.k2))
                                   : py::object(py::none());
        out["order_one_warning"] = closed.order_one_warning;
        return out;
      },
      py::arg("m"), py::arg("order"));

  m.def(
      "exact_moment_dp",
      [](unsigned m_, const std::optional<unsigned>& order) {
        return to_py_int(exact_moment_dp(m_, to_order(order)));
      },
      py::arg("m"), py::arg("order"));
  m.def(
      "exact_moment_binomial",
      [](unsigned m_, const std::optional<unsigned>& order) {
        return to_py_int(exact_moment_binomial(m_, to_order(order)));
      },
      py::arg("m"), py::arg("order"));
  m.def(
      "exact_moment_enum",
      [](unsigned m_, const std::optional<unsigned>& order) {
        return to_py_int(exact_moment_enum(m_, to_order(order)));
      },
      py::arg("m"), py::arg("order"));

  m.def(
      "moment_series",
      [](const std::optional<unsigned>& order, unsigned max_m,
         const std::string& method) {
        py::list out;
        for (const MomentRecord& rec :
             moment_series(to_order(order), max_m, method_from(method))) {
          out.append(from_record(rec));
        }
        return out;
      },
      py::arg("order"), py::arg("max_m"), py::arg("method") = "all");

  m.def(
      "audit",
      [](const std::optional<unsigned>& order, unsigned max_m) {
        const AuditReport report = audit(to_order(order), max_m);
        py::dict out;
        out["order"] = from_order(report.order);
        out["max_m"] = report.max_m;
        py::list records;
        for (const MomentRecord& rec : report.records) {
          records.append(from_record(rec));
        }
        out["records"] = records;
        out["first_disagreement"] =
            report.first_disagreement
                ? py::object(py::int_(*report.first_disagreement))
                : py::object(py::none());
        out["agree_count"] = report.agree_count;
        out["disagree_count"] = report.disagree_count;
        return out;
      },
      py::arg("order"), py::arg("max_m"));

  m.def(
      "compare_distributions",
      [](const std::optional<unsigned>& left,
         const std::optional<unsigned>& right, const std::string& mode,
         const std::optional<unsigned>& max_m) {
        CompareMode compare_mode;
        if (mode == "theorem") {
          compare_mode = CompareMode::theorem;
        } else if (mode == "oracle") {
          compare_mode = CompareMode::oracle;
        } else {
          throw std::invalid_argument("unknown mode '" + mode + "'");
        }
        const DistributionComparison cmp = compare_distributions(
            to_order(left), to_order(right), compare_mode, max_m);
        py::dict out;
        out["left"] = from_order(cmp.left);
        out["right"] = from_order(cmp.right);
        out["mode"] = to_string(cmp.mode);
        out["max_m"] = cmp.max_m ? py::object(py::int_(*cmp.max_m))
                                 : py::object(py::none());
        out["identical"] = cmp.identically_distributed;
        out["witness"] = cmp.witness ? py::object(py::int_(*cmp.witness))
                                     : py::object(py::none());
        return out;
      },
      py::arg("left"), py::arg("right"), py::arg("mode") = "theorem",
      py::arg("max_m") = py::none());

  m.def(
      "classify_sequences",
      [](unsigned m_, unsigned n) {
        const SequenceClassification c = classify_sequences(m_, n);
        py::dict out;
        out["m"] = c.m;
        out["n"] = c.n;
        out["k"] =
            c.k ? py::object(py::int_(*c.k)) : py::object(py::none());
        out["count_S0"] = c.count_S0;
        const auto opt = [](const std::optional<std::uint64_t>& v) {
          return v ? py::object(py::int_(*v)) : py::object(py::none());
        };
        out["count_Wj"] = opt(c.count_Wj);
        out["count_Wj_prime"] = opt(c.count_Wj_prime);
        out["count_Wj_minus_prime"] = opt(c.count_Wj_minus_prime);
        out["count_Wj_cap_S0"] = opt(c.count_Wj_cap_S0);
        return out;
      },
      py::arg("m"), py::arg("n"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Runs the command line tool in-process; returns (code, stdout, stderr).");
}
