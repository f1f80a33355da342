#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "einf/cli.hpp"
#include "einf/format.hpp"
#include "einf/steenrod.hpp"

namespace einf::cli {

namespace {

enum class OutputFormat { text, latex, json };

struct Config {
  std::string kind = "surjection";
  long long torsion = 0;
  std::string convention;
  std::string format = "text";

  ElementKind element_kind() const {
    auto k = parse_kind(kind);
    if (!k) throw ParseError("unknown kind '" + kind + "'", 0);
    return *k;
  }
  Torsion ring() const {
    if (torsion < 0) throw ParseError("torsion must be non-negative", 0);
    return Torsion(torsion);
  }
  Convention convention_or(Convention fallback) const {
    if (convention.empty()) return fallback;
    auto c = parse_convention(convention);
    if (!c) throw ParseError("unknown convention '" + convention + "'", 0);
    return *c;
  }
  OutputFormat output() const {
    if (format == "text") return OutputFormat::text;
    if (format == "latex") return OutputFormat::latex;
    if (format == "json") return OutputFormat::json;
    throw ParseError("unknown format '" + format + "'", 0);
  }
};

bool looks_like_json(const std::string& arg) {
  auto it = std::find_if(arg.begin(), arg.end(), [](unsigned char c) { return !std::isspace(c); });
  return it != arg.end() && *it == '{';
}

AnyElement read(const std::string& arg, ElementKind kind, const Config& cfg,
                Convention fallback = Convention::berger_fresse) {
  if (looks_like_json(arg)) {
    AnyElement e = from_json(arg);
    if (kind_of(e) != kind)
      throw ShapeError("expected a " + std::string(to_string(kind)) + " element, got " +
                           std::string(to_string(kind_of(e))),
                       0);
    return e;
  }
  return parse_element(arg, kind, cfg.ring(), cfg.convention_or(fallback));
}

void emit(const AnyElement& e, const Config& cfg, std::ostream& out) {
  switch (cfg.output()) {
    case OutputFormat::json:
      out << to_json(e, cfg.convention_or(Convention::berger_fresse)) << '\n';
      return;
    case OutputFormat::latex:
      if (const auto* s = std::get_if<SimplicialElement>(&e)) {
        out << render(*s, ChainFormat::latex) << '\n';
        return;
      }
      if (const auto* c = std::get_if<CubicalElement>(&e)) {
        out << render(*c, ChainFormat::latex) << '\n';
        return;
      }
      [[fallthrough]];
    case OutputFormat::text:
      out << render_text(e) << '\n';
      return;
  }
}

[[noreturn]] void unsupported(const char* command, ElementKind kind) {
  throw DomainError(std::string(command) + " is not defined for " + std::string(to_string(kind)) +
                    " elements");
}

AnyElement boundary_of(const AnyElement& e) {
  return std::visit(
      [](const auto& x) -> AnyElement {
        using T = std::decay_t<decltype(x)>;
        // the group ring sits in degree zero
        if constexpr (std::is_same_v<T, SymmetricRingElement>) return T(x.torsion());
        else return boundary(x);
      },
      e);
}

AnyElement compose_of(const AnyElement& x, const AnyElement& y, int i) {
  return std::visit(
      [&](const auto& a) -> AnyElement {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SimplicialElement> || std::is_same_v<T, CubicalElement>) {
          unsupported("compose", kind_of(x));
        } else {
          return compose(a, std::get<T>(y), i);
        }
      },
      x);
}

AnyElement product_of(const SymmetricRingElement& pi, const AnyElement& x) {
  return std::visit(
      [&](const auto& a) -> AnyElement {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SimplicialElement> || std::is_same_v<T, CubicalElement>) {
          pi.module().require_same_ring(a.module());
          T out(a.torsion());
          for (const auto& [sigma, c] : pi) out += permute_factors(sigma, a).scaled(c);
          return out;
        } else {
          return pi * a;
        }
      },
      x);
}

int complexity_of(const AnyElement& e) {
  if (const auto* s = std::get_if<SurjectionElement>(&e)) return complexity(*s);
  if (const auto* b = std::get_if<BarrattEcclesElement>(&e)) return complexity(*b);
  unsupported("complexity", kind_of(e));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain-level computations with E-infinity operads", "einf"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--kind", cfg.kind,
                 "Element kind: surjection, perm-ring, barratt-eccles, simplicial, cubical");
  app.add_option("--torsion", cfg.torsion, "Coefficients in Z/n (0 for the integers)");
  app.add_option("--convention", cfg.convention, "berger-fresse or mcclure-smith");
  app.add_option("--format", cfg.format, "text, latex or json");

  std::string x_arg, y_arg, chain_arg, operad = "surjection", context = "simplicial", target;
  int position = 1, dim = 0, r = 2, i = 0;
  SteenrodChainRequest request;

  auto* boundary_cmd = app.add_subcommand("boundary", "Differential of an element");
  boundary_cmd->add_option("element", x_arg)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Partial composition x o_i y");
  compose_cmd->add_option("x", x_arg)->required();
  compose_cmd->add_option("y", y_arg)->required();
  compose_cmd->add_option("--position,-p", position)->required();

  auto* product_cmd =
      app.add_subcommand("product", "Left action of a group-ring element (a perm-ring literal)");
  product_cmd->add_option("ring", x_arg)->required();
  product_cmd->add_option("element", y_arg)->required();

  auto* diagonal_cmd = app.add_subcommand("diagonal", "Alexander-Whitney diagonal");
  diagonal_cmd->add_option("element", x_arg)->required();

  auto* complexity_cmd = app.add_subcommand("complexity", "Complexity of an element");
  complexity_cmd->add_option("element", x_arg)->required();

  auto* table_cmd =
      app.add_subcommand("table-reduction", "Barratt-Eccles to surjection table reduction");
  table_cmd->add_option("element", x_arg)->required();

  auto* act_cmd = app.add_subcommand("act", "Action of a surjection element on chains");
  act_cmd->add_option("element", x_arg)->required();
  auto* dim_opt = act_cmd->add_option("--dim,-n", dim, "Act on the standard cell of this dimension");
  act_cmd->add_option("--chain", chain_arg, "Act on this arity-one chain instead")
      ->excludes(dim_opt);
  act_cmd->add_option("--context", context)->check(CLI::IsMember({"simplicial", "cubical"}));

  auto* psi_cmd = app.add_subcommand("psi", "Steenrod-Adem elements psi_r(e_i)");
  psi_cmd->add_option("--operad", operad)
      ->check(CLI::IsMember({"surjection", "barratt-eccles"}));
  psi_cmd->add_option("-r", r)->required();
  psi_cmd->add_option("-i", i)->required();

  auto* steenrod_cmd = app.add_subcommand("steenrod", "Chains computing Steenrod operations");
  steenrod_cmd->add_option("--prime", request.prime)->required();
  steenrod_cmd->add_option("-s", request.s)->required();
  steenrod_cmd->add_option("-q", request.q)->required();
  steenrod_cmd->add_flag("--bockstein", request.bockstein);
  steenrod_cmd->add_option("--context", context)->check(CLI::IsMember({"simplicial", "cubical"}));

  auto* convert_cmd = app.add_subcommand("convert", "Change the sign convention of a surjection");
  convert_cmd->add_option("element", x_arg)->required();
  convert_cmd->add_option("--to", target)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "einf: usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Convention bf = Convention::berger_fresse;
    if (boundary_cmd->parsed()) {
      emit(boundary_of(read(x_arg, cfg.element_kind(), cfg)), cfg, out);
    } else if (compose_cmd->parsed()) {
      const auto kind = cfg.element_kind();
      emit(compose_of(read(x_arg, kind, cfg), read(y_arg, kind, cfg), position), cfg, out);
    } else if (product_cmd->parsed()) {
      const auto pi = std::get<SymmetricRingElement>(read(x_arg, ElementKind::perm_ring, cfg));
      emit(product_of(pi, read(y_arg, cfg.element_kind(), cfg)), cfg, out);
    } else if (diagonal_cmd->parsed()) {
      const auto x = read(x_arg, ElementKind::barratt_eccles, cfg);
      const auto t = diagonal(std::get<BarrattEcclesElement>(x));
      out << (cfg.output() == OutputFormat::json ? to_json(t) : to_text(t)) << '\n';
    } else if (complexity_cmd->parsed()) {
      const int c = complexity_of(read(x_arg, cfg.element_kind(), cfg));
      if (cfg.output() == OutputFormat::json)
        out << nlohmann::json{{"complexity", c}}.dump() << '\n';
      else
        out << c << '\n';
    } else if (table_cmd->parsed()) {
      const auto x = read(x_arg, ElementKind::barratt_eccles, cfg);
      emit(with_convention(table_reduction(std::get<BarrattEcclesElement>(x)),
                           cfg.convention_or(bf)),
           cfg, out);
    } else if (act_cmd->parsed()) {
      const Convention ms = Convention::mcclure_smith;
      const auto x = std::get<SurjectionElement>(read(x_arg, ElementKind::surjection, cfg, ms));
      if (context == "simplicial") {
        if (chain_arg.empty())
          emit(act_simplicial(x, dim), cfg, out);
        else
          emit(act(x, std::get<SimplicialElement>(read(chain_arg, ElementKind::simplicial, cfg))),
               cfg, out);
      } else {
        if (chain_arg.empty())
          emit(act_cubical(x, dim), cfg, out);
        else
          emit(act(x, std::get<CubicalElement>(read(chain_arg, ElementKind::cubical, cfg))), cfg,
               out);
      }
    } else if (psi_cmd->parsed()) {
      if (operad == "surjection")
        emit(with_convention(psi_surjection(r, i), cfg.convention_or(bf)), cfg, out);
      else
        emit(psi_barratt_eccles(r, i), cfg, out);
    } else if (steenrod_cmd->parsed()) {
      request.context = context == "simplicial" ? ChainContext::simplicial : ChainContext::cubical;
      std::visit([&](const auto& chain) { emit(chain, cfg, out); }, steenrod_chain(request));
    } else if (convert_cmd->parsed()) {
      auto to = parse_convention(target);
      if (!to) throw ParseError("unknown convention '" + target + "'", 0);
      const auto x = std::get<SurjectionElement>(read(x_arg, ElementKind::surjection, cfg));
      emit(with_convention(x, *to), cfg, out);
    }
  } catch (const ShapeError& e) {
    err << "einf: shape error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "einf: parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "einf: domain error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace einf::cli
