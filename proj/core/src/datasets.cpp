#include "fod/datasets.hpp"

namespace fod {

namespace {

// Q(i) is written with basis (1, i); complex conjugation fixes 1, negates i.
constexpr const char* kRemarkA = R"json({
  "blocks": [
    {"n": 1,
     "algebra": {"kind": "field", "poly": [1, 0, 1], "var": "i"},
     "factor": {"label": "E", "dim": 1},
     "lifts": [{"name": "conj", "matrix": [["1", "0"], ["0", "-1"]]}]},
    {"n": 2,
     "algebra": {"kind": "rationals"},
     "factor": {"label": "C", "dim": 1}}
  ],
  "group": {"elements": [
    {"name": "id",   "tau": [1, 2], "maps": [{"sigma": "id"},   {"sigma": "id"}]},
    {"name": "conj", "tau": [1, 2], "maps": [{"sigma": "conj"}, {"sigma": "id"}]}
  ]},
  "fields": {"base": "Q", "full": "Q(i)", "table": {"id": "Q(i)", "conj,id": "Q"}}
})json";

constexpr const char* kRemarkA2 = R"json({
  "blocks": [
    {"n": 2,
     "algebra": {"kind": "field", "poly": [1, 0, 1], "var": "i"},
     "factor": {"label": "E", "dim": 1},
     "lifts": [{"name": "conj", "matrix": [["1", "0"], ["0", "-1"]]}]},
    {"n": 2,
     "algebra": {"kind": "rationals"},
     "factor": {"label": "C", "dim": 1}}
  ],
  "group": {"elements": [
    {"name": "id",   "tau": [1, 2], "maps": [{"sigma": "id"},   {"sigma": "id"}]},
    {"name": "conj", "tau": [1, 2], "maps": [{"sigma": "conj"}, {"sigma": "id"}]}
  ]},
  "fields": {"base": "Q", "full": "Q(i)", "table": {"id": "Q(i)", "conj,id": "Q"}}
})json";

constexpr const char* kSwap = R"json({
  "blocks": [
    {"n": 2, "algebra": {"kind": "rationals"}, "factor": {"label": "C", "dim": 1}},
    {"n": 2, "algebra": {"kind": "rationals"}, "factor": {"label": "C'", "dim": 1}}
  ],
  "group": {"elements": [
    {"name": "id",   "tau": [1, 2], "maps": [{}, {}]},
    {"name": "swap", "tau": [2, 1], "maps": [{}, {}]}
  ]},
  "fields": {"base": "K", "full": "L", "table": {"id": "L", "id,swap": "K"}}
})json";

constexpr const char* kQuatInner = R"json({
  "blocks": [
    {"n": 2,
     "algebra": {"kind": "quaternion", "a": "-1", "b": "-1"},
     "factor": {"label": "S", "dim": 2}}
  ],
  "group": {"elements": [
    {"name": "id", "maps": [{}]},
    {"name": "s",  "maps": [{"P": [[["1","0","0","0"], ["0","0","0","0"]],
                                   [["0","0","0","0"], ["-1","0","0","0"]]]}]}
  ]},
  "fields": {"base": "K", "full": "L"}
})json";

}  // namespace

std::optional<nlohmann::ordered_json> bundled_dataset(std::string_view name) {
  const char* text = nullptr;
  if (name == "remark-A") text = kRemarkA;
  if (name == "remark-A2") text = kRemarkA2;
  if (name == "swap-2xM2Q") text = kSwap;
  if (name == "quat-inner") text = kQuatInner;
  if (!text) return std::nullopt;
  return nlohmann::ordered_json::parse(text);
}

std::vector<std::string> bundled_dataset_names() { return {"remark-A", "remark-A2", "swap-2xM2Q", "quat-inner"}; }

}  // namespace fod
