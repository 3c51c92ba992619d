#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aquiver/ar.hpp"
#include "aquiver/decompose.hpp"
#include "aquiver/errors.hpp"
#include "aquiver/homological.hpp"
#include "aquiver/io.hpp"
#include "aquiver/tables.hpp"

using namespace aquiver;

namespace {

struct Options {
  std::string field;
  bool json = false;
  bool pretty = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Field field_option(const Options& opt) { return opt.field.empty() ? Field::rationals() : parse_field(opt.field); }

Document load_document(const std::string& path, const Options& opt) {
  const Json j = load(path);
  Document d = [&] {
    try {
      return document_from_json(j);
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }();
  if (!opt.field.empty()) {
    const Field f = parse_field(opt.field);
    if (j.contains("field") && !(f == d.field)) {
      throw InputError("--field " + opt.field + " conflicts with the document field " + d.field.name());
    }
    if (!j.contains("field")) {
      if (d.tame) d.tame = tame_from_json(j["tame"], d.orientation, f, "/tame");
      d.field = f;
    }
  }
  return d;
}

Orientation load_orientation(const std::string& path) {
  const Json j = load(path);
  try {
    return orientation_from_any(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Interval interval_arg(const std::string& text) {
  try {
    return Interval::parse(text);
  } catch (const InputError& e) {
    throw InputError("interval \"" + text + "\": " + e.what());
  }
}

unsigned thread_count() {
  const char* env = std::getenv("AQUIVER_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4) {
    throw InputError("AQUIVER_THREADS must be a positive integer, got \"" + s + "\"");
  }
  const int n = std::stoi(s);
  if (n < 1 || n > 1024) throw InputError("AQUIVER_THREADS must be between 1 and 1024");
  return static_cast<unsigned>(n);
}

void emit_json(const Json& j, const Options& opt) {
  if (opt.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

std::string bar_listing(const BarMultiset& bars) {
  std::string out;
  for (const auto& [i, m] : bars) {
    out += format_interval(i);
    if (m > 1) out += "  x" + std::to_string(m);
    out += "\n";
  }
  return out;
}

std::string labels_text(const std::vector<ProjectiveLabel>& labels) {
  if (labels.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += " + ";
    out += format_label(labels[k]);
  }
  return out;
}

int cmd_decompose(const std::string& path, const Options& opt) {
  const Document d = load_document(path, opt);
  const BarMultiset bars = d.bars ? *d.bars : decompose(*d.tame);
  if (opt.json) {
    emit_json(to_json(bars), opt);
  } else {
    std::cout << bar_listing(bars);
    std::cout << to_json(bars).dump(2) << "\n";
  }
  return 0;
}

int cmd_number(const char* key, std::size_t value, const Options& opt) {
  if (opt.json) {
    emit_json(Json{{key, value}}, opt);
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_present(const std::string& path, const std::string& interval, const Options& opt) {
  const Orientation o = load_orientation(path);
  const ProjPresentation p = proj_presentation(o, interval_arg(interval), field_option(opt));
  if (!opt.json) {
    std::cout << "P1 = " << labels_text(p.p1) << "\n";
    std::cout << "P0 = " << labels_text(p.p0) << "\n";
  }
  emit_json(to_json(p, o), opt);
  return 0;
}

int cmd_projectives(const std::string& path, const std::string& range, bool injective, const Options& opt) {
  const Orientation o = load_orientation(path);
  std::optional<Interval> r;
  if (!range.empty()) r = interval_arg(range);
  const SymbolicTable t = indecomposable_table(o, injective, r);
  if (opt.json) {
    emit_json(to_json(t), opt);
  } else {
    std::cout << format_table(t);
  }
  return 0;
}

int cmd_ar(const std::string& path, const std::string& interval, bool starting, bool verify, const Options& opt) {
  const unsigned threads = thread_count();
  const Orientation o = load_orientation(path);
  const Interval i = interval_arg(interval);
  const Field f = field_option(opt);
  const ARAnswer a = starting ? ar_starting_at(o, i, f) : ar_ending_at(o, i, f);
  Json j = to_json(a);
  std::string check;
  if (verify && a.sequence) {
    const auto probes = standard_probe_family(o, *a.sequence);
    const AlmostSplitReport r = check_almost_split(a.sequence->maps, probes, threads);
    j["verified"] = r.ok();
    j["probes"] = probes.size();
    check = std::string("almost split: ") + (r.ok() ? "yes" : "no") + " (" + std::to_string(probes.size()) +
            " probes, " + std::to_string(r.probes_used) + " with nonzero maps)";
    if (!r.ok()) throw InternalError("constructed sequence failed verification");
  }
  if (!opt.json) {
    std::cout << status_name(a.status) << "\n";
    if (a.sequence) {
      std::string middle;
      for (std::size_t k = 0; k < a.sequence->middle.size(); ++k) {
        if (k > 0) middle += " + ";
        middle += format_interval(a.sequence->middle[k]);
      }
      std::cout << "0 -> " << format_interval(a.sequence->left) << " -> " << middle << " -> "
                << format_interval(a.sequence->right) << " -> 0\n";
    }
    if (!check.empty()) std::cout << check << "\n";
  }
  emit_json(j, opt);
  return 0;
}

int cmd_scramble(const std::string& path, std::uint64_t seed, const Options& opt) {
  Document d = load_document(path, opt);
  const TameRep v = d.tame ? *d.tame : from_bars(d.orientation, *d.bars, d.field);
  d.tame = scramble(v, seed);
  d.bars.reset();
  emit_json(to_json(d), opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition and homological algebra for continuous type-A quiver representations", "aquiver"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", opt.field, "Q or Fp:<p> (default Q)");
    auto* j = sub->add_flag("--json", opt.json, "Compact JSON output");
    auto* p = sub->add_flag("--pretty", opt.pretty, "Human-readable output (default)");
    j->excludes(p);
  };

  std::string file, first, second, range;
  bool injective = false, ending = false, starting = false, verify = true;
  std::optional<std::uint64_t> seed;

  auto* dec = app.add_subcommand("decompose", "Barcode of a bars or tame document");
  dec->add_option("file", file, "Document JSON")->required();
  add_common(dec);

  auto* hom = app.add_subcommand("hom", "dim Hom(M_I, M_J)");
  hom->add_option("orientation", file, "Orientation JSON")->required();
  hom->add_option("I", first)->required();
  hom->add_option("J", second)->required();
  add_common(hom);

  auto* ext = app.add_subcommand("ext", "dim Ext^1(M_V, M_W)");
  ext->add_option("orientation", file, "Orientation JSON")->required();
  ext->add_option("V", first)->required();
  ext->add_option("W", second)->required();
  add_common(ext);

  auto* pres = app.add_subcommand("present", "Minimal projective presentation of M_I");
  pres->add_option("orientation", file, "Orientation JSON")->required();
  pres->add_option("I", first)->required();
  add_common(pres);

  auto* proj = app.add_subcommand("projectives", "Symbolic table of indecomposable projectives");
  proj->add_option("orientation", file, "Orientation JSON")->required();
  proj->add_option("--range", range, "Keep labels positioned inside this interval");
  proj->add_flag("--injective", injective, "List injectives instead");
  add_common(proj);

  auto* ar = app.add_subcommand("ar", "Auslander-Reiten sequence with a given end");
  ar->add_option("orientation", file, "Orientation JSON")->required();
  ar->add_option("interval", first)->required();
  auto* e = ar->add_flag("--ending", ending, "Interval is the right end (default)");
  auto* s = ar->add_flag("--starting", starting, "Interval is the left end");
  e->excludes(s);
  ar->add_flag("!--no-verify", verify, "Skip the probe verification");
  add_common(ar);

  auto* scr = app.add_subcommand("scramble", "Random isomorphic tame representation");
  scr->add_option("file", file, "Document JSON")->required();
  scr->add_option("--seed", seed, "Seed for the basis changes")->required();
  add_common(scr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (*dec) return cmd_decompose(file, opt);
    if (*hom) {
      const Orientation o = load_orientation(file);
      return cmd_number("hom", hom_dim(o, interval_arg(first), interval_arg(second)), opt);
    }
    if (*ext) {
      const Orientation o = load_orientation(file);
      return cmd_number("ext", ext_dim(o, interval_arg(first), interval_arg(second)), opt);
    }
    if (*pres) return cmd_present(file, first, opt);
    if (*proj) return cmd_projectives(file, range, injective, opt);
    if (*ar) return cmd_ar(file, first, starting, verify, opt);
    if (*scr) return cmd_scramble(file, *seed, opt);
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const InternalError& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
