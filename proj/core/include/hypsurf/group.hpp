#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypsurf/geometry.hpp"
#include "hypsurf/moebius.hpp"

namespace hypsurf {

/// Freely reduced word in the generators; letter k > 0 means generator k-1,
/// letter -k its inverse.
struct Word {
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    bool operator==(const Word&) const = default;
};

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& w1, const Word& w2);
Word cyclic_reduction(const Word& w);
/// Lexicographically least among all rotations of the cyclic reduction of w
/// and of its inverse; conjugacy invariant in a free group.
Word class_representative(const Word& w);
std::string to_string(const Word& w);
bool word_less(const Word& w1, const Word& w2);
/// False when the cyclic reduction of w is a proper power (or empty).
bool is_primitive_class(const Word& w);

struct FuchsianGroup;
std::string to_string(const FuchsianGroup& G, const Word& w);

struct SimplicityStatus {
    enum Kind { Unknown, Simple, NonSimple } kind = Unknown;
    int depth = 0;        // certificate depth for Simple
    Word witness;         // conjugator whose action makes the axes cross, for NonSimple
};

/// Closed geodesic: hyperbolic conjugacy class with canonical cyclic word.
struct ConjClass {
    Word rep;
    double trace = 0;
    double length = 0;
    SimplicityStatus simplicity;
};

struct CuspData {
    double omega = 0;
    Word peripheral;
    bool normalized = false;
};

struct FuchsianGroup {
    std::string label;
    std::vector<MoebiusMap> generators;
    std::vector<std::string> generator_labels;
    bool assumed_free = true;
    std::optional<CuspData> cusp;
};

MoebiusMap evaluate(const FuchsianGroup& G, const Word& w);

struct BallEntry {
    Word word;
    MoebiusMap map;
};

/// All freely reduced words of length <= max_word_length, each exactly once,
/// in breadth-first order starting with the empty word.
std::vector<BallEntry> ball(const FuchsianGroup& G, int max_word_length);

/// Number of elements ball() yields for `rank` generators.
long long ball_size(int rank, int max_word_length);

std::vector<ConjClass> conjugacy_classes(const FuchsianGroup& G, double max_trace, int depth);

/// Certificate search: NonSimple when some conjugated axis crosses the axis of
/// the class, Simple(depth) when no witness exists in the depth ball.
SimplicityStatus simplicity(const FuchsianGroup& G, const ConjClass& cls, int depth);

/// Conjugates the group so the given parabolic generates the stabilizer of
/// infinity as z -> z + omega, with omega = min |c| over the depth ball.
FuchsianGroup cusp_normalize(const FuchsianGroup& G, const Word& parabolic, int depth = 8);

struct MaximalCusp {
    double height = 0;
    double area = 0;
    double min_c = 0;
    Word witness;
    int depth = 0;
    bool tangency_confirmed = false;
};

MaximalCusp maximal_cusp(const FuchsianGroup& G, int depth);

/// True when every depth-ball translate of the class axis stays below the
/// euclidean height sqrt(1 + omega^2/4) (+1e-9). Requires a Simple status.
bool cusp_exclusion_check(const FuchsianGroup& G, const ConjClass& cls);

FuchsianGroup conjugate_group(const FuchsianGroup& G, const MoebiusMap& g);

}  // namespace hypsurf
