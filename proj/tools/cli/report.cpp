// Copyright 2026 The paulimeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <nlohmann/json.hpp>

namespace paulimeas::cli {

std::string report_to_json(const RunReport &r) {
    using nlohmann::json;
    json j;
    j["schema"] = "paulimeas.report/1";
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["num_qubits"] = r.num_qubits;
    j["num_terms"] = r.num_terms;
    if (!r.strategy.empty()) {
        j["strategy"] = r.strategy;
    }
    j["n_collections"] = r.n_collections;
    j["mean_collection_size"] = r.mean_collection_size;
    j["mean_independent"] = r.mean_independent;
    j["r_hat"] = r.r_hat;
    if (r.r_exact) {
        const RExactStats &s = *r.r_exact;
        j["r_exact"] = {{"states", s.states}, {"seed", s.seed}, {"min", s.min},
                        {"mean", s.mean},     {"max", s.max},   {"infinite", s.infinite}};
    }
    if (!r.gates.empty()) {
        json per = json::array();
        double actual = 0, theory = 0;
        for (const CollectionGates &g : r.gates) {
            per.push_back({{"size", g.size},
                           {"k", g.k},
                           {"theory_max", g.theory_max},
                           {"actual", g.actual},
                           {"construction", g.construction}});
            actual += static_cast<double>(g.actual);
            theory += static_cast<double>(g.theory_max);
        }
        double n = static_cast<double>(r.gates.size());
        j["two_qubit_gates"] = {{"per_collection", per}, {"mean_actual", actual / n}, {"mean_theory_max", theory / n}};
    }
    if (r.state) {
        const StateMetrics &s = *r.state;
        json st = {{"mg_eps2", s.mg_eps2}, {"mu_eps2", s.mu_eps2}};
        if (s.r_infinite) {
            st["r"] = "inf";
        } else {
            st["r"] = s.r;
        }
        st["shot_plan"] = {{"epsilon", s.epsilon},
                           {"total_shots", s.total_shots},
                           {"per_collection_shots", s.per_collection_shots}};
        j["state"] = st;
    }
    if (r.verification) {
        const Verification &v = *r.verification;
        json vj = {{"mode", v.mode}, {"passed", v.passed}, {"states", v.states},
                   {"seed", v.seed}, {"checks", v.checks}, {"worst", v.worst}};
        if (v.mode == "shots") {
            vj["shots"] = v.shots;
        }
        if (!v.counterexample.empty()) {
            vj["counterexample"] = v.counterexample;
        }
        j["verification"] = vj;
    }
    j["warnings"] = r.warnings;
    if (r.wall_seconds) {
        j["wall_seconds"] = *r.wall_seconds;
    }
    return j.dump(2) + "\n";
}

}  // namespace paulimeas::cli
