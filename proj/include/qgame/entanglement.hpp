// Entanglement quantification and game-type classification.
#pragma once

#include "gamecore.hpp"

namespace qgame {

inline constexpr double kClassTol = 1e-9;

enum class StateClass { Product, Partial, Maximal };
enum class GameType { G1, G2, G3, G4, Gc, Mixed };

inline const char* state_class_name(StateClass c) {
    switch (c) {
        case StateClass::Product: return "product";
        case StateClass::Partial: return "partial";
        case StateClass::Maximal: return "maximal";
    }
    return "?";
}

inline const char* game_type_name(GameType t) {
    switch (t) {
        case GameType::G1: return "G1";
        case GameType::G2: return "G2";
        case GameType::G3: return "G3";
        case GameType::G4: return "G4";
        case GameType::Gc: return "Gc";
        case GameType::Mixed: return "Mixed";
    }
    return "?";
}

struct EntanglementClass {
    StateClass cls;
    double ic;  // nats
};

// I_c = S_A + S_B for a pure 2-factor state.
inline double index_of_correlation(const StateVector& s) {
    if (s.factors.size() != 2)
        throw Error("index_of_correlation: state is not 2-factor");
    return von_neumann_entropy(reduced_density(s, 0)) +
           von_neumann_entropy(reduced_density(s, 1));
}

inline EntanglementClass classify_state(const StateVector& s) {
    const double ic = index_of_correlation(s);
    const double ic_max = 2.0 * std::log(std::min(s.factors[0], s.factors[1]));
    if (ic <= kClassTol) return {StateClass::Product, ic};
    if (std::abs(ic - ic_max) <= kClassTol) return {StateClass::Maximal, ic};
    return {StateClass::Partial, ic};
}

struct GameClassification {
    GameType type;
    std::vector<EntanglementClass> cells;  // row major
};

inline GameClassification classify_game(const GameSpec& g) {
    GameClassification res;
    if (g.unrestricted_sets) {
        res.type = GameType::Gc;
        return res;
    }
    bool product = false, partial = false, maximal = false;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            EntanglementClass c = classify_state(output_state(g, i, j));
            res.cells.push_back(c);
            product |= c.cls == StateClass::Product;
            partial |= c.cls == StateClass::Partial;
            maximal |= c.cls == StateClass::Maximal;
        }
    if (!maximal && !partial)
        res.type = GameType::G1;
    else if (!maximal && !product)
        res.type = GameType::G3;
    else if (!maximal)
        res.type = GameType::G2;
    else if (!product && !partial)
        res.type = GameType::G4;
    else
        res.type = GameType::Mixed;
    return res;
}

}  // namespace qgame
