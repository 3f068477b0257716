#include "softgrp/json_io.hpp"

#include <map>

#include "softgrp/error.hpp"

namespace softgrp::io {

namespace {

template <class Fn>
auto parsing(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json to_json(const SignedPermutation& w) {
  return json(std::vector<int>(w.window().begin(), w.window().end()));
}

SignedPermutation permutation_from_json(const json& j) {
  return SignedPermutation(parsing("signed permutation", [&] {
    if (!j.is_array()) throw Error(ErrorCode::Parse, "signed permutation must be an array");
    return j.get<std::vector<int>>();
  }));
}

json to_json(const FiniteGroup& g) {
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(to_json(x));
  return {{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

FiniteGroup group_from_json(const json& j) {
  const int degree = parsing("group", [&] { return field(j, "degree").get<int>(); });
  std::vector<SignedPermutation> gens;
  parsing("group", [&] {
    for (const auto& x : field(j, "generators")) gens.push_back(permutation_from_json(x));
    return 0;
  });
  FiniteGroup g = FiniteGroup::closure(degree, std::move(gens));
  if (j.contains("order")) {
    const auto order = parsing("group", [&] { return j.at("order").get<std::size_t>(); });
    if (order != g.order()) {
      throw Error(ErrorCode::InvalidArgument, "declared order " + std::to_string(order) +
                                                  " but generators give order " +
                                                  std::to_string(g.order()));
    }
  }
  return g;
}

json to_json(const SignedComposition& a) { return json(a.parts()); }

SignedComposition composition_from_json(const json& j) {
  return SignedComposition(parsing("signed composition", [&] { return j.get<std::vector<int>>(); }));
}

json to_json(const BiPartition& mu) { return {{"plus", mu.plus()}, {"minus", mu.minus()}}; }

BiPartition bipartition_from_json(const json& j) {
  return parsing("bi-partition", [&] {
    return BiPartition(field(j, "plus").get<std::vector<int>>(),
                       field(j, "minus").get<std::vector<int>>());
  });
}

json to_json(const Parameter& a) {
  if (const auto* s = a.label()) return *s;
  if (const auto* c = a.composition()) return to_json(*c);
  if (const auto* mu = a.bipartition()) return to_json(*mu);
  json items = json::array();
  for (const auto& x : *a.items()) items.push_back(to_json(x));
  return {{"tuple", items}};
}

Parameter parameter_from_json(const json& j) {
  if (j.is_string()) return Parameter(j.get<std::string>());
  if (j.is_array()) return Parameter(composition_from_json(j));
  if (j.is_object() && j.contains("tuple")) {
    Parameter::Tuple items;
    parsing("tuple parameter", [&] {
      for (const auto& x : j.at("tuple")) items.push_back(parameter_from_json(x));
      return 0;
    });
    return Parameter::tuple(std::move(items));
  }
  if (j.is_object()) return Parameter(bipartition_from_json(j));
  throw Error(ErrorCode::Parse, "unrecognized parameter " + j.dump());
}

json to_json(const SoftGroup& s) {
  json params = json::array();
  json assign = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    params.push_back(to_json(s.params()[i]));
    json gens = json::array();
    for (const auto& g : greedy_generating_set(s.assigned(i))) gens.push_back(to_json(g));
    assign.push_back({{"param", to_json(s.params()[i])}, {"subgroup_generators", gens}});
  }
  return {{"carrier", to_json(s.carrier())}, {"params", params}, {"assign", assign}};
}

SoftGroup soft_group_from_json(const json& j) {
  FiniteGroup carrier = group_from_json(field(j, "carrier"));
  std::vector<Parameter> params;
  parsing("soft group", [&] {
    for (const auto& x : field(j, "params")) params.push_back(parameter_from_json(x));
    return 0;
  });

  std::map<Parameter, ElementSet> values;
  parsing("soft group", [&] {
    for (const auto& entry : field(j, "assign")) {
      Parameter a = parameter_from_json(field(entry, "param"));
      ElementSet value;
      try {
        if (entry.contains("subgroup_elements")) {
          for (const auto& x : entry.at("subgroup_elements")) {
            value.push_back(permutation_from_json(x));
          }
        } else {
          std::vector<SignedPermutation> gens;
          for (const auto& x : field(entry, "subgroup_generators")) {
            gens.push_back(permutation_from_json(x));
          }
          value = subgroup_closure(carrier, gens);
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        throw Error(ErrorCode::NotSubgroup, "value at parameter " + a.to_string() + ": " + e.what());
      }
      if (!values.emplace(a, std::move(value)).second) {
        throw Error(ErrorCode::InvalidArgument, "parameter " + a.to_string() + " assigned twice");
      }
    }
    return 0;
  });

  std::vector<ElementSet> assign;
  for (const auto& a : params) {
    auto it = values.find(a);
    if (it == values.end()) {
      throw Error(ErrorCode::InvalidArgument, "parameter " + a.to_string() + " has no value");
    }
    assign.push_back(std::move(it->second));
    values.erase(it);
  }
  if (!values.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "value given for undeclared parameter " + values.begin()->first.to_string());
  }
  return SoftGroup::make(std::move(carrier), std::move(params), std::move(assign));
}

json to_json(const SoftHom& h) {
  json images = json::array();
  for (const auto& g : h.source().carrier().generators()) {
    images.push_back({{"generator", to_json(g)}, {"image", to_json(h.f()(g))}});
  }
  json p = json::array();
  for (std::size_t i = 0; i < h.source().size(); ++i) {
    p.push_back({{"from", to_json(h.source().params()[i])}, {"to", to_json(h.map_param(i))}});
  }
  return {{"source", to_json(h.source())},
          {"target", to_json(h.target())},
          {"f", {{"images", images}}},
          {"p", p}};
}

SoftHom soft_hom_from_json(const json& j) {
  SoftGroup source = soft_group_from_json(field(j, "source"));
  SoftGroup target = soft_group_from_json(field(j, "target"));
  const json& fj = field(j, "f");

  std::optional<GroupHom> f;
  parsing("group map", [&] {
    if (fj.contains("table")) {
      std::map<SignedPermutation, SignedPermutation> table;
      for (const auto& entry : fj.at("table")) {
        table.emplace(permutation_from_json(field(entry, "from")),
                      permutation_from_json(field(entry, "to")));
      }
      std::vector<std::uint32_t> indices;
      for (const auto& g : source.carrier().elements()) {
        auto it = table.find(g);
        if (it == table.end()) {
          throw Error(ErrorCode::NotHomomorphism, "table has no image for " + g.to_string());
        }
        auto idx = target.carrier().index_of(it->second);
        if (!idx) throw Error(ErrorCode::NotHomomorphism, it->second.to_string() + " is not in the codomain");
        indices.push_back(static_cast<std::uint32_t>(*idx));
      }
      if (table.size() != indices.size()) {
        throw Error(ErrorCode::NotHomomorphism, "table has entries outside the domain");
      }
      f = GroupHom::from_table(source.carrier(), target.carrier(), std::move(indices));
    } else {
      std::map<SignedPermutation, SignedPermutation> images;
      for (const auto& entry : field(fj, "images")) {
        images.emplace(permutation_from_json(field(entry, "generator")),
                       permutation_from_json(field(entry, "image")));
      }
      f = GroupHom::from_generator_images(source.carrier(), target.carrier(), images);
    }
    return 0;
  });

  std::map<Parameter, Parameter> pmap;
  parsing("parameter map", [&] {
    for (const auto& entry : field(j, "p")) {
      pmap.emplace(parameter_from_json(field(entry, "from")), parameter_from_json(field(entry, "to")));
    }
    return 0;
  });
  std::vector<std::size_t> p;
  for (const auto& a : source.params()) {
    auto it = pmap.find(a);
    if (it == pmap.end()) {
      throw Error(ErrorCode::InvalidArgument, "parameter map has no image for " + a.to_string());
    }
    auto idx = target.index_of(it->second);
    if (!idx) {
      throw Error(ErrorCode::InvalidArgument, "parameter map sends " + a.to_string() +
                                                  " to unknown " + it->second.to_string());
    }
    p.push_back(*idx);
  }
  return SoftHom::make(std::move(source), std::move(target), *std::move(f), std::move(p));
}

namespace {

const char* witness_kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::CancellationPair: return "cancellation-pair";
    case Witness::Kind::LeftInverse: return "left-inverse";
    case Witness::Kind::ExhaustiveSearch: return "exhaustive-search";
  }
  return "?";
}

}  // namespace

json to_json(const MorphismVerdict& v) {
  json out;
  out["property"] = to_string(v.property);
  if (v.holds == Holds::UnknownAtScale) {
    out["holds"] = to_string(v.holds);
  } else {
    out["holds"] = v.holds == Holds::True;
  }
  if (v.witness) {
    json homs = json::array();
    for (const auto& h : v.witness->homs) homs.push_back(to_json(h));
    json w = {{"kind", witness_kind_name(v.witness->kind)},
              {"construction", v.witness->construction},
              {"homs", homs}};
    if (v.witness->kind == Witness::Kind::ExhaustiveSearch) w["candidates"] = v.witness->candidates;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["note"] = v.note;
  out["oracle"] = {{"objects", v.oracle_objects}, {"homs", v.oracle_homs}};
  return out;
}

MorphismVerdict verdict_from_json(const json& j) {
  MorphismVerdict v;
  parsing("verdict", [&] {
    const auto property = field(j, "property").get<std::string>();
    if (property == "monic") v.property = Property::Monic;
    else if (property == "epic") v.property = Property::Epic;
    else if (property == "split-monic") v.property = Property::SplitMonic;
    else throw Error(ErrorCode::Parse, "unknown property " + property);

    const json& holds = field(j, "holds");
    if (holds.is_boolean()) v.holds = holds.get<bool>() ? Holds::True : Holds::False;
    else if (holds == "unknown-at-scale") v.holds = Holds::UnknownAtScale;
    else throw Error(ErrorCode::Parse, "bad holds value " + holds.dump());

    if (j.contains("note")) v.note = j.at("note").get<std::string>();
    if (j.contains("oracle")) {
      v.oracle_objects = field(j.at("oracle"), "objects").get<std::size_t>();
      v.oracle_homs = field(j.at("oracle"), "homs").get<std::size_t>();
    }
    const json& w = field(j, "witness");
    if (!w.is_null()) {
      Witness witness;
      const auto kind = field(w, "kind").get<std::string>();
      if (kind == "cancellation-pair") witness.kind = Witness::Kind::CancellationPair;
      else if (kind == "left-inverse") witness.kind = Witness::Kind::LeftInverse;
      else if (kind == "exhaustive-search") witness.kind = Witness::Kind::ExhaustiveSearch;
      else throw Error(ErrorCode::Parse, "unknown witness kind " + kind);
      if (w.contains("construction")) witness.construction = w.at("construction").get<std::string>();
      if (w.contains("candidates")) witness.candidates = w.at("candidates").get<std::size_t>();
      for (const auto& h : field(w, "homs")) witness.homs.push_back(soft_hom_from_json(h));
      v.witness = std::move(witness);
    }
    return 0;
  });
  return v;
}

}  // namespace softgrp::io
