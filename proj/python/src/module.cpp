#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <covering/analytics.hpp>
#include <covering/characters.hpp>
#include <covering/errors.hpp>
#include <covering/frobenius.hpp>
#include <covering/group.hpp>
#include <covering/partitions.hpp>
#include <covering/reduction.hpp>
#include <covering/rodgers.hpp>

namespace py = pybind11;
using namespace covering;

namespace {

  py::object to_int(mpz_class const& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
  }

  py::object to_fraction(mpq_class const& q) {
    return py::module_::import("fractions").attr("Fraction")(to_int(q.get_num()), to_int(q.get_den()));
  }

  // Accepts int, Fraction, or a string such as "7/10".
  mpq_class to_rational(py::handle value) {
    mpq_class q;
    if (py::isinstance<py::str>(value)) {
      try {
        q = mpq_class(value.cast<std::string>());
      } catch (std::invalid_argument const&) {
        throw ArgumentError("not a rational number: " + value.cast<std::string>());
      }
    } else if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
      q = mpq_class(mpz_class(py::str(value.attr("numerator")).cast<std::string>()),
                    mpz_class(py::str(value.attr("denominator")).cast<std::string>()));
    } else {
      throw ArgumentError("expected an int, Fraction or string, got "
                          + py::str(py::type::of(value)).cast<std::string>());
    }
    q.canonicalize();
    return q;
  }

  mpz_class to_mpz(py::handle value) {
    return mpz_class(py::str(value).cast<std::string>());
  }

  py::object to_python(nlohmann::json const& j) {
    return py::module_::import("json").attr("loads")(j.dump());
  }

  // A set is a list of class labels; its classes are united.
  NormalSet make_set(GroupPtr const& g, std::vector<std::string> const& labels) {
    std::vector<std::size_t> classes;
    for (auto const& label : labels) {
      classes.push_back(g->parse_class(label));
    }
    return NormalSet(g, classes);
  }

  std::vector<NormalSet> make_sets(GroupPtr const&                              g,
                                   std::vector<std::vector<std::string>> const& sets) {
    std::vector<NormalSet> out;
    for (auto const& labels : sets) {
      out.push_back(make_set(g, labels));
    }
    return out;
  }

  std::vector<ClassDescriptor> make_descriptors(GroupPtr const&                 g,
                                                std::vector<std::string> const& labels) {
    std::vector<ClassDescriptor> out;
    for (auto const& label : labels) {
      out.push_back(g->descriptor(g->parse_class(label)));
    }
    return out;
  }

  py::dict zeta_dict(ZetaValue const& z) {
    py::dict d;
    d["lower"]          = to_fraction(z.lower);
    d["upper"]          = to_fraction(z.upper);
    d["exact"]          = z.exact;
    d["precision_bits"] = z.precision_bits;
    d["value"]          = z.approx();
    return d;
  }

}  // namespace

PYBIND11_MODULE(_covering, m) {
  m.doc() = "Exact covering computations for finite groups.";
  m.attr("__version__") = COVERING_VERSION;

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("partition_count", [](int n) { return to_int(partition_count(n)); }, py::arg("n"));

  m.def(
      "partitions",
      [](int n) {
        std::vector<std::vector<int>> out;
        for (auto const& p : enumerate_partitions(n)) {
          out.push_back(p.parts());
        }
        return out;
      },
      py::arg("n"), "Partitions of n in the library's enumeration order.");

  m.def(
      "delta",
      [](std::vector<int> cycle_type) {
        auto d = delta_of_type(Partition(std::move(cycle_type)));
        py::dict out;
        out["n"]      = d.n;
        out["orbits"] = d.orbits;
        out["delta"]  = d.delta;
        return out;
      },
      py::arg("cycle_type"), "n minus the number of orbits of a permutation of this cycle type.");

  m.def(
      "zeta",
      [](std::vector<py::object> const& degrees, py::object const& t) {
        std::vector<mpz_class> ds;
        for (auto const& d : degrees) {
          ds.push_back(to_mpz(d));
        }
        return zeta_dict(zeta_value(ds, to_rational(t)));
      },
      py::arg("degrees"), py::arg("t"),
      "Enclosure of the sum of d^-t over the given degrees.");

  m.def(
      "greedy_blocks",
      [](std::vector<py::object> const& sizes, py::object const& group_order,
         py::object const& epsilon) {
        std::vector<mpz_class> zs;
        for (auto const& s : sizes) {
          zs.push_back(to_mpz(s));
        }
        return to_python(greedy_blocks(zs, to_mpz(group_order), to_rational(epsilon)).to_json());
      },
      py::arg("sizes"), py::arg("group_order"), py::arg("epsilon"));

  m.def(
      "budget_threshold",
      [](py::object const& beta, long limit) {
        auto    r = budget_threshold(to_rational(beta), limit);
        py::dict out;
        out["beta"]              = to_fraction(r.beta);
        out["verified_up_to"]    = r.verified_up_to;
        out["threshold"]         = r.threshold;
        out["threshold_per_ell"] = r.threshold_per_ell;
        return out;
      },
      py::arg("beta"), py::arg("limit") = 10'000);

  py::class_<GroupContext, std::shared_ptr<GroupContext>>(m, "Group")
      .def(py::init([](std::string const& text, std::optional<std::string> cache_dir,
                       int table_cap) {
             GroupOptions options;
             if (cache_dir) {
               options.cache_dir = *cache_dir;
             }
             options.table_cap = table_cap;
             return std::const_pointer_cast<GroupContext>(make_group(text, options));
           }),
           py::arg("text"), py::arg("cache_dir") = py::none(),
           py::arg("table_cap") = default_table_cap)
      .def_property_readonly("description", &GroupContext::description)
      .def_property_readonly("backend", &GroupContext::backend_name)
      .def_property_readonly("order", [](GroupContext const& g) { return to_int(g.order()); })
      .def_property_readonly("num_classes", &GroupContext::num_classes)
      .def_property_readonly("identity_class", &GroupContext::identity_class)
      .def_property_readonly("class_labels",
                             [](GroupContext const& g) {
                               std::vector<std::string> out;
                               for (std::size_t c = 0; c < g.num_classes(); ++c) {
                                 out.push_back(g.class_label(c));
                               }
                               return out;
                             })
      .def_property_readonly("class_sizes",
                             [](GroupContext const& g) {
                               py::list out;
                               for (std::size_t c = 0; c < g.num_classes(); ++c) {
                                 out.append(to_int(g.class_size(c)));
                               }
                               return out;
                             })
      .def("class_index", &GroupContext::parse_class, py::arg("label"))
      .def(
          "degrees",
          [](GroupContext const& g) {
            auto const* table = g.table();
            if (!table) {
              throw CapabilityError("irreducible degrees need a character table");
            }
            py::list out;
            for (auto const& d : table->degrees()) {
              out.append(to_int(d));
            }
            return out;
          },
          "Irreducible degrees, in table order.")
      .def(
          "character",
          [](GroupContext const& g, std::size_t chi, std::string const& label) {
            auto const* table = g.table();
            if (!table) {
              throw CapabilityError("character values need a character table");
            }
            if (chi >= table->num_irreducibles()) {
              throw ArgumentError("irreducible index out of range");
            }
            return table->value(chi, g.parse_class(label)).to_string();
          },
          py::arg("chi"), py::arg("label"),
          "Character value as text, e.g. \"1/2 + 1/2*sqrt(5)\".")
      .def(
          "frobenius",
          [](GroupContext const& g, std::string const& a, std::string const& b,
             std::string const& c) {
            auto const* table = g.table();
            if (!table) {
              throw CapabilityError("the class-product sum needs a character table");
            }
            return to_fraction(
                frobenius_sum(*table, g.parse_class(a), g.parse_class(b), g.parse_class(c)));
          },
          py::arg("a"), py::arg("b"), py::arg("c"))
      .def(
          "cover",
          [](std::shared_ptr<GroupContext> const& g,
             std::vector<std::vector<std::string>> const& sets) {
            auto ns = make_sets(g, sets);
            return to_python(covers_group(ns).to_json(*g));
          },
          py::arg("sets"), "Whether the product of the normal sets is the whole group.")
      .def(
          "diameter",
          [](std::shared_ptr<GroupContext> const& g, std::vector<std::string> const& labels,
             std::optional<std::size_t> cap) { return power_diameter(make_set(g, labels), cap); },
          py::arg("labels"), py::arg("cap") = py::none(), "Least k with S^k = G.")
      .def(
          "pipeline",
          [](std::shared_ptr<GroupContext> const& g,
             std::vector<std::vector<std::string>> const& sets, py::object const& delta,
             py::object const& epsilon) {
            auto ns = make_sets(g, sets);
            return to_python(
                conjecture_pipeline(ns, to_rational(delta), to_rational(epsilon)).to_json(*g));
          },
          py::arg("sets"), py::arg("delta"), py::arg("epsilon"))
      .def(
          "rodgers",
          [](std::shared_ptr<GroupContext> const& g, std::vector<std::string> const& labels) {
            auto    check = rodgers_verify(g, make_descriptors(g, labels));
            py::dict out;
            out["criterion"] = check.criterion;
            out["delta_sum"] = check.delta_sum;
            out["threshold"] = check.threshold;
            out["covered"]   = check.covered;
            return out;
          },
          py::arg("labels"))
      .def(
          "zeta",
          [](GroupContext const& g, py::object const& t) {
            return zeta_dict(zeta_value(g, to_rational(t)));
          },
          py::arg("t"))
      .def(
          "thompson",
          [](std::shared_ptr<GroupContext> const& g) -> std::optional<std::string> {
            auto c = thompson_search(g);
            if (!c) {
              return std::nullopt;
            }
            return g->class_label(*c);
          },
          "Label of a class C with C^2 = G, or None.")
      .def("__repr__", [](GroupContext const& g) {
        return "Group('" + g.description() + "', backend='" + g.backend_name() + "')";
      });
}
