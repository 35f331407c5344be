// Command line front end: loads poset files, runs the cohomology and
// audit routines, and reports either human-readable text or a JSON
// document ({"schema": "momac-report/1", ...}).
//
// Exit codes: 0 on success, 1 when a check fails or the input poset
// is semantically invalid, 2 on syntax, file, or usage errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "momac/momac.hpp"

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace momac;

struct Options {
  bool json = false;
  bool timing = false;
};

std::vector<int> zero_two_vector(VertexSet a, int m) {
  std::vector<int> out(m, 0);
  for (int v = 1; v <= m; ++v)
    if (a & vertex_bit(v)) out[v - 1] = 2;
  return out;
}

std::vector<int> zero_one_vector(VertexSet a, int m) {
  std::vector<int> out(m, 0);
  for (int v = 1; v <= m; ++v)
    if (a & vertex_bit(v)) out[v - 1] = 1;
  return out;
}

std::string tuple_string(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

json group_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const Int& t : g.torsion) torsion.push_back(t.str());
  return json{{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

// Slots sorted by (|a|, a, i); the display order everywhere.
std::vector<const CohomologyRing::Slot*> sorted_slots(const CohomologyRing& ring, bool nontrivial_only) {
  std::vector<const CohomologyRing::Slot*> out;
  for (const auto& [key, slot] : ring.slots()) {
    if (nontrivial_only && slot.reduction.group().trivial()) continue;
    out.push_back(&slot);
  }
  std::sort(out.begin(), out.end(), [](const CohomologyRing::Slot* x, const CohomologyRing::Slot* y) {
    return std::make_tuple(popcount(x->a), x->a, x->i) < std::make_tuple(popcount(y->a), y->a, y->i);
  });
  return out;
}

// Aggregates slot groups into one group per topological degree.
std::map<int, AbelianGroup> groups_by_degree(const CohomologyRing& ring) {
  std::map<int, AbelianGroup> out;
  for (const CohomologyRing::Slot* slot : sorted_slots(ring, true)) {
    const AbelianGroup& g = slot->reduction.group();
    AbelianGroup& acc = out[2 * popcount(slot->a) - slot->i];
    acc.free_rank += g.free_rank;
    acc.torsion.insert(acc.torsion.end(), g.torsion.begin(), g.torsion.end());
  }
  for (auto& [p, g] : out) std::sort(g.torsion.begin(), g.torsion.end());
  return out;
}

std::string betti_line(const std::vector<long>& betti) {
  std::string out = "betti:";
  for (long b : betti) out += " " + std::to_string(b);
  return out;
}

int classify(const error& e) {
  return e.code() == errc::syntax_error || e.code() == errc::io_error ? 2 : 1;
}

struct Command {
  std::string name;
  Options opts;
  json inputs = json::array();
  std::function<int(json&)> run;  // fills the JSON result; prints human text when not in JSON mode
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomology of moment-angle complexes over simplicial posets"};
  app.require_subcommand(1);

  // Stored in a deque so the references captured by the subcommand
  // callbacks stay valid as commands are added.
  std::deque<Command> commands;
  auto common = [](CLI::App* sub, Command& cmd) {
    sub->add_flag("--json", cmd.opts.json, "emit a JSON report on stdout");
    sub->add_flag("--timing", cmd.opts.timing, "report elapsed wall time");
  };

  // validate
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "validate";
    auto* sub = app.add_subcommand("validate", "check the simplicial poset axioms");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    common(sub, cmd);
    cmd.run = [file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      out["valid"] = true;
      out["poset"] = p.name();
      out["vertices"] = p.vertex_count();
      out["elements"] = p.size();
      out["rank"] = p.top_rank();
      if (!cmd.opts.json)
        std::cout << "ok: " << p.name() << " (m=" << p.vertex_count() << ", " << p.size() << " elements, rank "
                  << p.top_rank() << ")\n";
      return 0;
    };
  }

  // info
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "info";
    auto* sub = app.add_subcommand("info", "summary of a poset");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    common(sub, cmd);
    cmd.run = [file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      std::vector<long> by_rank(p.top_rank() + 1, 0);
      for (int s = 0; s < p.size(); ++s) ++by_rank[p.element(s).rank];
      json maximal = json::array();
      for (int s : p.maximal_elements()) maximal.push_back(p.element(s).id);
      out["poset"] = p.name();
      out["vertices"] = p.vertex_count();
      out["elements"] = p.size();
      out["rank"] = p.top_rank();
      out["dimension"] = p.top_rank() - 1;
      out["faces_by_rank"] = by_rank;
      out["simplicial_complex"] = is_simplicial_complex(p);
      out["pure"] = p.is_pure();
      out["min_max_rank"] = p.min_max_rank();
      out["maximal_faces"] = maximal;
      if (!cmd.opts.json) {
        std::cout << "poset: " << p.name() << "\nvertices: " << p.vertex_count() << "\nelements: " << p.size()
                  << "\nrank: " << p.top_rank() << "\ndimension: " << p.top_rank() - 1 << "\nfaces by rank:";
        for (std::size_t r = 0; r < by_rank.size(); ++r) std::cout << " " << by_rank[r];
        std::cout << "\nsimplicial complex: " << (is_simplicial_complex(p) ? "yes" : "no")
                  << "\npure: " << (p.is_pure() ? "yes" : "no") << "\nmin max rank: " << p.min_max_rank()
                  << "\nmaximal faces:";
        for (int s : p.maximal_elements()) std::cout << " " << p.element(s).id;
        std::cout << "\n";
      }
      return 0;
    };
  }

  // hilbert
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "hilbert";
    auto* sub = app.add_subcommand("hilbert", "graded ranks of the face ring");
    auto file = std::make_shared<std::string>();
    auto degree = std::make_shared<int>(8);
    auto multigraded = std::make_shared<bool>(false);
    sub->add_option("file", *file, "poset file")->required();
    sub->add_option("--degree", *degree, "total degree bound (default 8)");
    sub->add_flag("--multigraded", *multigraded, "list ranks by multidegree");
    common(sub, cmd);
    cmd.run = [file, degree, multigraded, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      HilbertTable table = hilbert_function(p, *degree);
      out["degree_bound"] = table.degree_bound;
      out["total"] = table.by_total_degree;
      json rows = json::array();
      for (const auto& [a, count] : table.by_multidegree) rows.push_back(json{{"a", a}, {"rank", count}});
      out["multigraded"] = std::move(rows);
      if (!cmd.opts.json) {
        for (std::size_t d = 0; d < table.by_total_degree.size(); ++d)
          if (d % 2 == 0) std::cout << "deg " << d << ": " << table.by_total_degree[d] << "\n";
        if (*multigraded)
          for (const auto& [a, count] : table.by_multidegree) std::cout << "a=" << tuple_string(a) << ": " << count << "\n";
      }
      return 0;
    };
  }

  // betti
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "betti";
    auto* sub = app.add_subcommand("betti", "Betti numbers of the moment-angle complex");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    common(sub, cmd);
    cmd.run = [file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      CohomologyRing ring = CohomologyRing::compute(p);
      std::vector<long> betti = ring.betti();
      out["betti"] = betti;
      out["poincare"] = poincare_polynomial(betti);
      out["total_rank"] = ring.total_rank();
      if (!cmd.opts.json) {
        std::cout << betti_line(betti) << "\n";
        std::cout << "poincare: " << poincare_polynomial(betti) << "\n";
        std::cout << "total rank: " << ring.total_rank() << "\n";
      }
      return 0;
    };
  }

  // cohomology
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "cohomology";
    auto* sub = app.add_subcommand("cohomology", "integral cohomology groups of the moment-angle complex");
    auto file = std::make_shared<std::string>();
    auto multigraded = std::make_shared<bool>(false);
    sub->add_option("file", *file, "poset file")->required();
    sub->add_flag("--multigraded", *multigraded, "one group per multidegree");
    common(sub, cmd);
    cmd.run = [file, multigraded, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      CohomologyRing ring = CohomologyRing::compute(p);

      json rows = json::array();
      for (const CohomologyRing::Slot* slot : sorted_slots(ring, true)) {
        const AbelianGroup& g = slot->reduction.group();
        json row;
        row["a"] = zero_one_vector(slot->a, p.vertex_count());
        row["i"] = slot->i;
        row["p"] = 2 * popcount(slot->a) - slot->i;
        row["rank"] = g.free_rank;
        row["torsion"] = group_json(g)["torsion"];
        rows.push_back(std::move(row));
      }
      out["multigraded"] = std::move(rows);
      json by_degree = json::array();
      for (const auto& [deg, g] : groups_by_degree(ring))
        by_degree.push_back(json{{"p", deg}, {"rank", g.free_rank}, {"torsion", group_json(g)["torsion"]}, {"pretty", g.to_string()}});
      out["by_degree"] = std::move(by_degree);
      std::vector<long> betti = ring.betti();
      out["betti"] = betti;

      if (!cmd.opts.json) {
        if (*multigraded) {
          for (const CohomologyRing::Slot* slot : sorted_slots(ring, true))
            std::cout << "H^{" << -slot->i << "," << tuple_string(zero_two_vector(slot->a, p.vertex_count()))
                      << "} = " << slot->reduction.group().to_string() << "\n";
        } else {
          for (const auto& [deg, g] : groups_by_degree(ring)) std::cout << "H^" << deg << " = " << g.to_string() << "\n";
        }
        std::cout << betti_line(betti) << "\n";
      }
      return 0;
    };
  }

  // cup-table
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "cup-table";
    auto* sub = app.add_subcommand("cup-table", "generators and pairwise cup products");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    common(sub, cmd);
    cmd.run = [file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      CohomologyRing ring = CohomologyRing::compute(p);

      struct Generator {
        std::string name;
        const CohomologyRing::Slot* slot;
        long index;
        CohomologyClass cls;
      };
      std::vector<Generator> generators;
      std::map<std::pair<VertexSet, int>, std::vector<std::string>> names;
      for (const CohomologyRing::Slot* slot : sorted_slots(ring, true)) {
        for (long g = 0; g < slot->reduction.generator_count(); ++g) {
          CohomologyClass cls = ring.zero_class(slot->a, slot->i);
          cls.coords[g] = 1;
          std::string name = "g" + std::to_string(generators.size() + 1);
          names[{slot->a, slot->i}].push_back(name);
          generators.push_back({std::move(name), slot, g, std::move(cls)});
        }
      }

      auto combination = [&names](const CohomologyClass& cls) {
        auto it = names.find({cls.a, cls.i});
        if (it == names.end() || cls.is_zero()) return std::string("0");
        std::string out;
        for (std::size_t k = 0; k < cls.coords.size(); ++k) {
          const Int& c = cls.coords[k];
          if (c == 0) continue;
          if (out.empty())
            out += c < 0 ? "-" : "";
          else
            out += c < 0 ? " - " : " + ";
          Int a = abs(c);
          if (a != 1) out += a.str() + " ";
          out += it->second[k];
        }
        return out.empty() ? std::string("0") : out;
      };

      json gens = json::array();
      for (const Generator& g : generators) {
        const AbelianGroup& group = g.slot->reduction.group();
        const bool torsion = g.index < static_cast<long>(group.torsion.size());
        json row;
        row["name"] = g.name;
        row["a"] = zero_one_vector(g.slot->a, p.vertex_count());
        row["i"] = g.slot->i;
        row["p"] = 2 * popcount(g.slot->a) - g.slot->i;
        row["order"] = torsion ? json(group.torsion[g.index].str()) : json("infinite");
        row["representative"] = ring.representative(g.cls).to_string();
        gens.push_back(std::move(row));
      }
      out["generators"] = std::move(gens);

      json products = json::array();
      std::vector<std::string> human;
      for (const Generator& x : generators)
        for (const Generator& y : generators) {
          CohomologyClass z = ring.cup(x.cls, y.cls);
          json row;
          row["left"] = x.name;
          row["right"] = y.name;
          row["value"] = combination(z);
          products.push_back(std::move(row));
          if (!z.is_zero()) human.push_back(x.name + " * " + y.name + " = " + combination(z));
        }
      out["products"] = std::move(products);

      if (!cmd.opts.json) {
        std::cout << "generators:\n";
        for (const Generator& g : generators) {
          const AbelianGroup& group = g.slot->reduction.group();
          const bool torsion = g.index < static_cast<long>(group.torsion.size());
          std::cout << "  " << g.name << " = [" << ring.representative(g.cls).to_string() << "]"
                    << "  degree " << 2 * popcount(g.slot->a) - g.slot->i << ", bidegree (" << -g.slot->i << ","
                    << tuple_string(zero_two_vector(g.slot->a, p.vertex_count())) << ")"
                    << (torsion ? ", order " + group.torsion[g.index].str() : "") << "\n";
        }
        std::cout << "nonzero products:\n";
        for (const std::string& line : human) std::cout << "  " << line << "\n";
        if (human.empty()) std::cout << "  (none)\n";
      }
      return 0;
    };
  }

  // hochster-check
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "hochster-check";
    auto* sub = app.add_subcommand("hochster-check", "compare Koszul cohomology with cellular cohomology of the restrictions");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    common(sub, cmd);
    cmd.run = [file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      HochsterReport report = hochster_check(p);
      out["pass"] = report.pass;
      out["bidegrees_checked"] = report.bidegrees_checked;
      json mismatches = json::array();
      for (const HochsterMismatch& mm : report.mismatches)
        mismatches.push_back(json{{"a", zero_one_vector(mm.a, p.vertex_count())},
                                  {"i", mm.i},
                                  {"koszul", group_json(mm.koszul)},
                                  {"cellular", group_json(mm.cellular)}});
      out["mismatches"] = std::move(mismatches);
      if (!cmd.opts.json) {
        std::cout << "checked " << report.bidegrees_checked << " bidegrees\n";
        for (const HochsterMismatch& mm : report.mismatches)
          std::cout << "mismatch at a=" << tuple_string(zero_one_vector(mm.a, p.vertex_count())) << " i=" << mm.i
                    << ": " << mm.koszul.to_string() << " vs " << mm.cellular.to_string() << "\n";
        std::cout << (report.pass ? "pass" : "FAIL") << "\n";
      }
      return report.pass ? 0 : 1;
    };
  }

  // lsop-check
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "lsop-check";
    auto* sub = app.add_subcommand("lsop-check", "verify a candidate linear system of parameters");
    auto file = std::make_shared<std::string>();
    auto matrix_file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    sub->add_option("--matrix", *matrix_file, "candidate matrix file (n rows, m columns)")->required();
    common(sub, cmd);
    cmd.run = [file, matrix_file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      cmd.inputs.push_back(*matrix_file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      IntMatrix lambda = parse_matrix_file(*matrix_file);
      LsopResult rational = is_rational_lsop(p, lambda);
      LsopResult integral = is_integral_lsop(p, lambda);
      LsopResult restricted = check_lsop_restriction(p, lambda);

      auto witness = [&p](const LsopResult& r) { return r.ok ? json(nullptr) : json(p.element(r.witness).id); };
      out["rational"] = rational.ok;
      out["rational_witness"] = witness(rational);
      out["integral"] = integral.ok;
      out["integral_witness"] = witness(integral);
      out["restriction"] = restricted.ok;
      out["restriction_witness"] = witness(restricted);
      out["agrees"] = rational.ok == restricted.ok;
      if (!cmd.opts.json) {
        auto show = [&p](const char* label, const LsopResult& r) {
          std::cout << label << ": " << (r.ok ? "yes" : "no");
          if (!r.ok) std::cout << " (witness: " << p.element(r.witness).id << ")";
          std::cout << "\n";
        };
        show("rational", rational);
        show("integral", integral);
        show("restriction-criterion", restricted);
        std::cout << "routes agree: " << (rational.ok == restricted.ok ? "yes" : "no") << "\n";
      }
      return rational.ok && rational.ok == restricted.ok ? 0 : 1;
    };
  }

  // lsop-find
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "lsop-find";
    auto* sub = app.add_subcommand("lsop-find", "search for a rational linear system of parameters");
    auto file = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(1);
    auto attempts = std::make_shared<int>(1000);
    auto bound = std::make_shared<int>(9);
    sub->add_option("file", *file, "poset file")->required();
    sub->add_option("--seed", *seed, "random seed (default 1)");
    sub->add_option("--attempts", *attempts, "attempt budget (default 1000)");
    sub->add_option("--bound", *bound, "entry bound (default 9)");
    common(sub, cmd);
    cmd.run = [file, seed, attempts, bound, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      LsopSearch search = find_rational_lsop(p, *attempts, *bound, *seed);
      out["found"] = search.found;
      out["attempts_used"] = search.attempts_used;
      out["matrix"] = search.found ? matrix_json(search.matrix) : json(nullptr);
      if (!cmd.opts.json) {
        if (search.found) {
          std::cout << "found after " << search.attempts_used << " attempts:\n";
          for (int r = 0; r < search.matrix.rows(); ++r) {
            for (int c = 0; c < search.matrix.cols(); ++c) std::cout << (c ? " " : "") << search.matrix(r, c).str();
            std::cout << "\n";
          }
        } else {
          std::cout << "no rational lsop found in " << search.attempts_used << " attempts\n";
        }
      }
      return search.found ? 0 : 1;
    };
  }

  // trc
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "trc";
    auto* sub = app.add_subcommand("trc", "torus rank lower bounds against the total Betti number");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    common(sub, cmd);
    cmd.run = [file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      TrcReport report = trc_audit(p);
      out["m"] = report.m;
      out["n"] = report.n;
      out["min_max_rank"] = report.mrk;
      out["pure"] = report.pure;
      out["trk"] = report.trk;
      out["hrk"] = report.hrk;
      out["hrk_underlying"] = report.hrk_underlying;
      out["bound_trk"] = report.bound_trk.str();
      out["bound_mrk"] = report.bound_mrk.str();
      out["pass_trk"] = report.pass_trk;
      out["pass_mrk"] = report.pass_mrk;
      out["pass_fold"] = report.pass_fold;
      out["pass"] = report.pass;
      if (!cmd.opts.json) {
        std::cout << "m=" << report.m << " n=" << report.n << " mrk=" << report.mrk
                  << " pure=" << (report.pure ? "yes" : "no") << "\n";
        std::cout << "trk=" << report.trk << "\n";
        std::cout << "hrk=" << report.hrk << "\n";
        std::cout << "hrk(underlying)=" << report.hrk_underlying << "\n";
        std::cout << "2^trk = " << report.bound_trk.str() << " <= hrk: " << (report.pass_trk ? "pass" : "FAIL") << "\n";
        std::cout << "2^(m-mrk) = " << report.bound_mrk.str() << " <= hrk: " << (report.pass_mrk ? "pass" : "FAIL")
                  << "\n";
        std::cout << "hrk >= hrk(underlying): " << (report.pass_fold ? "pass" : "FAIL") << "\n";
        std::cout << (report.pass ? "pass" : "FAIL") << "\n";
      }
      return report.pass ? 0 : 1;
    };
  }

  // fold
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "fold";
    auto* sub = app.add_subcommand("fold", "underlying simplicial complex and the folding map");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "poset file")->required();
    common(sub, cmd);
    cmd.run = [file, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      FoldResult fold = underlying_complex(p);
      out["complex"] = serialize_poset(fold.complex);
      json map = json::array();
      for (int s = 0; s < p.size(); ++s)
        map.push_back(json{{"from", p.element(s).id}, {"to", fold.complex.element(fold.fold.assignment[s]).id}});
      out["map"] = std::move(map);
      if (!cmd.opts.json) {
        std::cout << serialize_poset(fold.complex);
        std::cout << "map:\n";
        for (int s = 0; s < p.size(); ++s)
          std::cout << "  " << p.element(s).id << " -> " << fold.complex.element(fold.fold.assignment[s]).id << "\n";
      }
      return 0;
    };
  }

  // join
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "join";
    auto* sub = app.add_subcommand("join", "join product of two posets");
    auto file_a = std::make_shared<std::string>();
    auto file_b = std::make_shared<std::string>();
    sub->add_option("first", *file_a, "first poset file")->required();
    sub->add_option("second", *file_b, "second poset file")->required();
    common(sub, cmd);
    cmd.run = [file_a, file_b, &cmd](json& out) {
      cmd.inputs.push_back(*file_a);
      cmd.inputs.push_back(*file_b);
      SimplicialPoset a = validate(parse_poset_file(*file_a));
      SimplicialPoset b = validate(parse_poset_file(*file_b));
      SimplicialPoset joined = join_product(a, b);
      out["poset"] = joined.name();
      out["vertices"] = joined.vertex_count();
      out["elements"] = joined.size();
      out["text"] = serialize_poset(joined);
      if (!cmd.opts.json) std::cout << serialize_poset(joined);
      return 0;
    };
  }

  // limit-check
  {
    commands.emplace_back();
    Command& cmd = commands.back();
    cmd.name = "limit-check";
    auto* sub = app.add_subcommand("limit-check", "compare face ring ranks with the inverse limit of vertex polynomial rings");
    auto file = std::make_shared<std::string>();
    auto degree = std::make_shared<int>(6);
    sub->add_option("file", *file, "poset file")->required();
    sub->add_option("--degree", *degree, "total degree bound (default 6)");
    common(sub, cmd);
    cmd.run = [file, degree, &cmd](json& out) {
      cmd.inputs.push_back(*file);
      SimplicialPoset p = validate(parse_poset_file(*file));
      LimitReport report = limit_check(p, *degree);
      out["pass"] = report.pass;
      out["degree_bound"] = report.degree_bound;
      out["multidegrees_checked"] = report.rows.size();
      json rows = json::array();
      for (const LimitRow& row : report.rows)
        if (row.ring_rank != row.limit_rank)
          rows.push_back(json{{"a", row.multidegree}, {"ring", row.ring_rank}, {"limit", row.limit_rank}});
      out["mismatches"] = std::move(rows);
      if (!cmd.opts.json) {
        std::cout << "checked " << report.rows.size() << " multidegrees up to total degree " << report.degree_bound
                  << "\n";
        for (const LimitRow& row : report.rows)
          if (row.ring_rank != row.limit_rank)
            std::cout << "mismatch at " << tuple_string(row.multidegree) << ": ring " << row.ring_rank << " vs limit "
                      << row.limit_rank << "\n";
        std::cout << (report.pass ? "pass" : "FAIL") << "\n";
      }
      return report.pass ? 0 : 1;
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (Command& cmd : commands) {
    if (!app.get_subcommand(cmd.name)->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    json result;
    int rc = 0;
    json envelope;
    envelope["schema"] = "momac-report/1";
    envelope["command"] = cmd.name;
    try {
      rc = cmd.run(result);
      envelope["inputs"] = cmd.inputs;
      envelope["result"] = std::move(result);
    } catch (const error& e) {
      rc = classify(e);
      envelope["inputs"] = cmd.inputs;
      const std::string prefix = std::string(errc_name(e.code())) + ": ";
      std::string message = e.what();
      if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
      envelope["error"] = json{{"code", errc_name(e.code())}, {"message", std::move(message)}};
      if (!cmd.opts.json) std::cerr << e.what() << "\n";
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (cmd.opts.timing) envelope["timing_ms"] = elapsed;
    if (cmd.opts.json) std::cout << envelope.dump(2) << "\n";
    if (cmd.opts.timing && !cmd.opts.json) std::cout << "time: " << elapsed << " ms\n";
    return rc;
  }
  return 2;
}
