#include <doctest.h>

#include "helpers.hpp"

using namespace archlab;
using th::Q;

namespace {

NeuroCircuit circuit2(const char* w01, const char* w02, const char* w10,
                      const char* w12, std::size_t suppl) {
  WeightMap w0;
  w0.set(1, Q(w01));
  w0.set(2, Q(w02));
  WeightMap w1;
  w1.set(0, Q(w10));
  w1.set(2, Q(w12));
  std::vector<Neuron> ns;
  ns.push_back(set_neuron(NeuronFeature(0, w0, Q("1/2"), Q("1/2"))));
  ns.push_back(set_neuron(NeuronFeature(1, w1, Q("1/2"), Q("1/2"))));
  return NeuroCircuit::make(std::move(ns), suppl);
}

}  // namespace

TEST_CASE("series recognition") {
  CHECK(check_series(th::series_circuit(3)));
  CHECK(check_series(th::series_circuit(1)));

  // a chain with a broken middle link is not a series
  {
    std::vector<Neuron> ns;
    for (std::size_t id = 0; id < 3; ++id) {
      WeightMap w;
      if (id == 0) w.set(3, Q("1"));
      if (id == 2) w.set(1, Q("1"));
      ns.push_back(set_neuron(NeuronFeature(id, w, Q("0"), Q("1/2"))));
    }
    CHECK_FALSE(check_series(NeuroCircuit::make(std::move(ns), 1)));
  }

  // two external sources disqualify it
  {
    std::vector<Neuron> ns;
    WeightMap w;
    w.set(1, Q("1"));
    ns.push_back(set_neuron(NeuronFeature(0, w, Q("0"), Q("1/2"))));
    CHECK_FALSE(check_series(NeuroCircuit::make(std::move(ns), 2)));
  }

  // a negative chain weight disqualifies it
  {
    std::vector<Neuron> ns;
    WeightMap w;
    w.set(1, Q("-1"));
    ns.push_back(set_neuron(NeuronFeature(0, w, Q("0"), Q("1/2"))));
    CHECK_FALSE(check_series(NeuroCircuit::make(std::move(ns), 1)));
  }
}

TEST_CASE("parallel composition recognition") {
  CHECK(check_parallel_composition(th::parallel_circuit(2)));

  // a leaf fed by another leaf breaks the hub shape
  {
    std::vector<Neuron> ns;
    WeightMap hub;
    hub.set(3, Q("1"));
    ns.push_back(set_neuron(NeuronFeature(0, hub, Q("0"), Q("1/2"))));
    WeightMap leaf1;
    leaf1.set(0, Q("1"));
    leaf1.set(2, Q("1/4"));
    ns.push_back(set_neuron(NeuronFeature(1, leaf1, Q("0"), Q("1/2"))));
    WeightMap leaf2;
    leaf2.set(0, Q("1"));
    ns.push_back(set_neuron(NeuronFeature(2, leaf2, Q("0"), Q("1/2"))));
    CHECK_FALSE(check_parallel_composition(NeuroCircuit::make(std::move(ns), 1)));
  }

  // a single neuron is both a series and a parallel composition
  NeuroCircuit lone = th::one_neuron_circuit("1/2", "1", "0");
  CHECK(check_parallel_composition(lone));
  CHECK(check_series(lone));
}

TEST_CASE("positive loop recognition") {
  CHECK(check_positive_loop(circuit2("1/2", "1", "1", "0", 1)));
  CHECK_FALSE(check_positive_loop(circuit2("-1/2", "1", "1", "0", 1)));
  CHECK_FALSE(check_positive_loop(th::series_circuit(3)));
  // the second neuron may not listen to the external source
  CHECK_FALSE(check_positive_loop(circuit2("1/2", "1", "1", "1/4", 1)));
}

TEST_CASE("negative loop recognition") {
  CHECK(check_negative_loop(circuit2("-1", "1", "1", "0", 1)));
  CHECK_FALSE(check_negative_loop(circuit2("1/2", "1", "1", "0", 1)));
  // zero is neither strictly negative nor positive
  CHECK_FALSE(check_negative_loop(circuit2("0", "1", "1", "0", 1)));
  CHECK_FALSE(check_positive_loop(circuit2("0", "1", "1", "0", 1)));
}

TEST_CASE("inhibition recognition") {
  CHECK(check_inhibition(th::inhibition_circuit()));
  // a reverse inhibiting edge makes it contralateral instead
  CHECK_FALSE(check_inhibition(th::contra_circuit()));
  // needs its own external source per neuron
  CHECK_FALSE(check_inhibition(circuit2("0", "1", "-1", "0", 1)));
}

TEST_CASE("contralateral inhibition recognition") {
  CHECK(check_contra_inhib(th::contra_circuit()));
  CHECK_FALSE(check_contra_inhib(th::inhibition_circuit()));
  CHECK_FALSE(check_contra_inhib(th::two_neuron_inhib("-1/2", "1", "-1", "0")));
}

TEST_CASE("classify aggregates the predicates") {
  CHECK(classify(th::series_circuit(3)) ==
        std::vector<ArchetypeClass>{ArchetypeClass::Series});
  CHECK(classify(th::mixed_circuit()).empty());
  CHECK(classify(th::one_neuron_circuit("1/2", "1", "0")) ==
        std::vector<ArchetypeClass>{ArchetypeClass::Series,
                                    ArchetypeClass::ParallelComposition});
  CHECK(classify(th::contra_circuit()) ==
        std::vector<ArchetypeClass>{ArchetypeClass::ContralateralInhibition});
}

TEST_CASE("loop and inhibition classes are mutually exclusive") {
  th::Rng rng(55);
  for (int i = 0; i < 1000; ++i) {
    NeuroCircuit c = th::random_circuit(rng);
    bool both_loops = check_positive_loop(c) && check_negative_loop(c);
    bool both_inhib = check_inhibition(c) && check_contra_inhib(c);
    CHECK_FALSE(both_loops);
    CHECK_FALSE(both_inhib);
  }
}

TEST_CASE("classification depends only on the static features") {
  th::Rng rng(56);
  for (const NeuroCircuit& c : th::corpus()) {
    NeuroCircuit cur = c;
    auto before = classify(cur);
    for (int step = 0; step < 5; ++step) {
      cur = next_step(cur, th::random_input(rng, cur.env_len()));
      CHECK(classify(cur) == before);
    }
  }
}

TEST_CASE("archetype names are the CLI vocabulary") {
  CHECK(archetype_name(ArchetypeClass::Series) == "series");
  CHECK(archetype_name(ArchetypeClass::ContralateralInhibition) ==
        "contralateral-inhibition");
}
