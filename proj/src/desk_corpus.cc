// Copyright 2026 The leichtkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leichtkit/desk_corpus.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <string_view>

namespace leichtkit::desk {
namespace {

using Words = std::span<const std::string_view>;

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n) by rejection.
  size_t Index(size_t n) {
    const uint64_t range = n;
    const uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    uint64_t x = engine_();
    while (x > limit) x = engine_();
    return static_cast<size_t>(x % range);
  }
  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Normal() {
    const double u1 = 1.0 - Uniform();
    const double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
  bool Chance(double p) { return Uniform() < p; }
  std::string_view Pick(Words words) { return words[Index(words.size())]; }

 private:
  std::mt19937_64 engine_;
};

// --- easy style -----------------------------------------------------------

constexpr std::string_view kEasySubjects[] = {
    "Der Mann", "Die Frau", "Das Kind", "Mein Vater", "Meine Mutter",
    "Der Bus-Fahrer", "Die Ärztin", "Der Lehrer", "Die Nachbarin",
    "Mein Bruder", "Meine Schwester", "Der Koch", "Die Oma", "Der Opa",
    "Das Mädchen", "Der Junge", "Die Familie", "Der Hund", "Die Katze",
    "Der Bürger-Meister", "Die Polizei", "Der Freund", "Die Freundin",
};

constexpr std::string_view kEasyPronouns[] = {"Ich", "Wir", "Sie", "Er", "Es",
                                              "Ihr", "Du"};

constexpr std::string_view kEasyTransitive[] = {
    "kauft", "sieht", "hat", "sucht", "braucht", "mag", "holt", "malt",
    "liest", "trinkt", "isst", "baut", "findet", "bringt", "putzt",
};

constexpr std::string_view kEasyObjects[] = {
    "ein Brot", "einen Apfel", "ein Buch", "einen Ball", "die Zeitung",
    "ein Eis", "die Milch", "einen Brief", "ein Bild", "das Haus",
    "den Bus-Plan", "die Kranken-Kasse", "ein Geschenk", "den Schlüssel",
    "eine Tasse Tee", "das Fahr-Rad", "die Wasch-Maschine", "einen Kuchen",
};

constexpr std::string_view kEasyIntransitive[] = {
    "spielt", "wohnt", "arbeitet", "wartet", "schläft", "läuft", "sitzt",
    "lacht", "singt", "hilft", "lernt", "tanzt",
};

constexpr std::string_view kEasyPlaces[] = {
    "im Garten", "in der Schule", "zu Hause", "im Park", "in der Stadt",
    "am See", "im Rat-Haus", "beim Arzt", "im Kranken-Haus", "im Laden",
    "auf der Straße", "im Bus", "in der Küche", "am Bahn-Hof",
};

constexpr std::string_view kEasyTimes[] = {
    "Heute", "Morgen", "Jetzt", "Am Montag", "Am Abend", "Am Morgen",
    "Im Sommer", "Im Winter", "Bald", "Oft",
};

constexpr std::string_view kEasyNouns[] = {
    "das Wetter", "der Tag", "das Essen", "der Weg", "das Zimmer",
    "die Straße", "der Park", "das Wasser", "die Luft", "das Fest",
};

constexpr std::string_view kEasyAdjectives[] = {
    "gut", "schön", "warm", "kalt", "neu", "groß", "klein", "laut", "leise",
    "schnell", "nett", "wichtig", "einfach", "toll", "voll", "leer",
};

constexpr std::string_view kEasyModals[] = {"wollen", "können", "müssen",
                                            "dürfen", "möchten"};

constexpr std::string_view kEasyInfinitives[] = {
    "kaufen", "sehen", "holen", "machen", "lesen", "bauen", "finden",
    "bringen", "essen", "trinken",
};

constexpr std::string_view kEasyFollowUps[] = {
    "Das ist gut.", "Das ist wichtig.", "Das macht Spaß.", "Das ist neu.",
    "Alle sind froh.", "Das ist nicht schwer.", "Das hilft uns.",
    "Dann gehen wir nach Hause.", "Das ist ein schöner Tag.",
};

std::string EasySentence(Rng& rng) {
  std::string s;
  switch (rng.Index(6)) {
    case 0:
      s = std::string(rng.Pick(kEasySubjects)) + " " +
          std::string(rng.Pick(kEasyTransitive)) + " " +
          std::string(rng.Pick(kEasyObjects)) + ".";
      break;
    case 1:
      s = std::string(rng.Pick(kEasySubjects)) + " " +
          std::string(rng.Pick(kEasyIntransitive)) + " " +
          std::string(rng.Pick(kEasyPlaces)) + ".";
      break;
    case 2:
      s = std::string(rng.Pick(kEasyTimes)) + " ist " +
          std::string(rng.Pick(kEasyNouns)) + " " +
          std::string(rng.Pick(kEasyAdjectives)) + ".";
      break;
    case 3:
      s = std::string(rng.Pick(kEasyPronouns)) + " " +
          std::string(rng.Pick(kEasyModals)) + " " +
          std::string(rng.Pick(kEasyObjects)) + " " +
          std::string(rng.Pick(kEasyInfinitives)) + ".";
      break;
    case 4: {
      std::string subject(rng.Pick(kEasySubjects));
      subject[0] = static_cast<char>(subject[0] - 'A' + 'a');
      s = std::string(rng.Pick(kEasyTimes)) + " " +
          std::string(rng.Pick(kEasyIntransitive)) + " " + subject + " " +
          std::string(rng.Pick(kEasyPlaces)) + ".";
      break;
    }
    default:
      s = std::string(rng.Pick(kEasyFollowUps));
      break;
  }
  return s;
}

// --- normal style ---------------------------------------------------------

constexpr std::string_view kNormalSubjects[] = {
    "Die Landesregierung", "Das Verkehrsministerium", "Der Stadtrat",
    "Die Bundesregierung", "Der Aufsichtsrat", "Die Staatsanwaltschaft",
    "Der Gesundheitsausschuss", "Die Kommunalverwaltung",
    "Der Vorstandsvorsitzende", "Die Bürgerinitiative",
    "Das Umweltbundesamt", "Die Opposition", "Der Wirtschaftsverband",
    "Die Krankenkassenvereinigung", "Der Landtagsabgeordnete",
};

constexpr std::string_view kNormalSpeechVerbs[] = {
    "teilte mit", "erklärte", "kündigte an", "betonte", "bestätigte",
    "kritisierte", "unterstrich", "räumte ein", "verdeutlichte",
};

constexpr std::string_view kNormalClauseSubjects[] = {
    "die vorgesehenen Infrastrukturmaßnahmen",
    "die geplanten Haushaltskürzungen",
    "die umfassende Verwaltungsreform",
    "die vereinbarten Tarifverhandlungen",
    "die angekündigten Sanierungsarbeiten",
    "die umstrittenen Genehmigungsverfahren",
    "die erforderlichen Sicherheitsüberprüfungen",
    "die zusätzlichen Fördermittel",
    "die beantragten Baugenehmigungen",
    "die vorläufigen Untersuchungsergebnisse",
};

constexpr std::string_view kNormalAdverbials[] = {
    "aufgrund erheblicher Verzögerungen",
    "infolge anhaltender Lieferengpässe",
    "angesichts der angespannten Haushaltslage",
    "trotz intensiver Bemühungen sämtlicher Beteiligten",
    "im Rahmen einer umfassenden Neuausrichtung",
    "unter Berücksichtigung datenschutzrechtlicher Bestimmungen",
    "nach Einschätzung unabhängiger Sachverständiger",
    "vor dem Hintergrund steigender Energiekosten",
};

constexpr std::string_view kNormalTimes[] = {
    "voraussichtlich erst im kommenden Frühjahr",
    "frühestens im nächsten Haushaltsjahr",
    "innerhalb der vorgesehenen Fristen",
    "bis zum Ende des laufenden Quartals",
    "im Verlauf der kommenden Legislaturperiode",
};

constexpr std::string_view kNormalParticiples[] = {
    "umgesetzt", "abgeschlossen", "bewilligt", "überarbeitet", "ausgewertet",
    "eingeleitet", "verabschiedet", "genehmigt",
};

constexpr std::string_view kNormalRelatives[] = {
    "welche im vergangenen Jahr nach langwierigen Beratungen beschlossen "
    "worden waren",
    "die von zahlreichen Interessenverbänden wiederholt kritisiert wurden",
    "deren Finanzierung bislang nicht abschließend geklärt werden konnte",
    "die ursprünglich für das vergangene Geschäftsjahr vorgesehen waren",
    "welche die Lebensbedingungen der betroffenen Bevölkerung nachhaltig "
    "verbessern sollen",
};

constexpr std::string_view kNormalConcessives[] = {
    "Obwohl die zuständigen Behörden bereits frühzeitig auf mögliche "
    "Schwierigkeiten hingewiesen hatten",
    "Nachdem die Verhandlungen zwischen den Tarifparteien mehrfach "
    "unterbrochen worden waren",
    "Während die Opposition eine unverzügliche Aufklärung sämtlicher "
    "Vorwürfe forderte",
    "Da die wirtschaftlichen Rahmenbedingungen sich zunehmend verschlechtert "
    "haben",
    "Nachdem das Verwaltungsgericht die ursprüngliche Entscheidung "
    "aufgehoben hatte",
};

constexpr std::string_view kNormalMainClauses[] = {
    "sah sich die Landesregierung gezwungen, ihre bisherige Strategie "
    "grundlegend zu überdenken",
    "verständigten sich die Beteiligten schließlich auf einen tragfähigen "
    "Kompromiss",
    "blieb eine abschließende Bewertung der Situation zunächst aus",
    "wurde die Durchführung der Maßnahmen auf unbestimmte Zeit verschoben",
    "mussten die Verantwortlichen ihre ursprünglichen Prognosen deutlich "
    "korrigieren",
};

std::string NormalSentence(Rng& rng) {
  std::string s;
  switch (rng.Index(3)) {
    case 0:
      s = std::string(rng.Pick(kNormalSubjects)) + " " +
          std::string(rng.Pick(kNormalSpeechVerbs)) + ", dass " +
          std::string(rng.Pick(kNormalClauseSubjects)) + ", " +
          std::string(rng.Pick(kNormalRelatives)) + ", " +
          std::string(rng.Pick(kNormalAdverbials)) + " " +
          std::string(rng.Pick(kNormalTimes)) + " " +
          std::string(rng.Pick(kNormalParticiples)) + " werden könnten.";
      break;
    case 1:
      s = std::string(rng.Pick(kNormalConcessives)) + ", " +
          std::string(rng.Pick(kNormalMainClauses)) + ".";
      break;
    default:
      s = std::string(rng.Pick(kNormalAdverbials)) + " " +
          std::string(rng.Pick(kNormalMainClauses)) + ", zumal " +
          std::string(rng.Pick(kNormalClauseSubjects)) + " " +
          std::string(rng.Pick(kNormalTimes)) + " " +
          std::string(rng.Pick(kNormalParticiples)) + " werden sollen.";
      s[0] = static_cast<char>(s[0] - 'a' + 'A');
      break;
  }
  return s;
}

// Intermediate style: an easy main clause extended by one subordinate clause.
std::string MediumSentence(Rng& rng) {
  std::string s = EasySentence(rng);
  s.pop_back();  // final '.'
  constexpr std::string_view kJoins[] = {", weil ", ", obwohl ", ", damit "};
  return s + std::string(rng.Pick(kJoins)) +
         std::string(rng.Pick(kNormalClauseSubjects)) + " " +
         std::string(rng.Pick(kNormalParticiples)) + " werden.";
}

size_t CountWords(std::string_view s) {
  size_t words = 0;
  bool in_word = false;
  for (char c : s) {
    const bool space = c == ' ';
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

std::vector<Paragraph> Paragraphs(size_t count, uint64_t seed, bool easy) {
  Rng rng(seed);
  std::vector<Paragraph> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    Paragraph p;
    p.sentence_count = easy ? 3 + rng.Index(4) : 2 + rng.Index(3);
    for (size_t k = 0; k < p.sentence_count; ++k) {
      if (k > 0) p.text += easy ? "\n" : " ";
      p.text += easy ? EasySentence(rng) : NormalSentence(rng);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Paragraph> EasyParagraphs(size_t count, uint64_t seed) {
  return Paragraphs(count, seed, true);
}

std::vector<Paragraph> NormalParagraphs(size_t count, uint64_t seed) {
  return Paragraphs(count, seed, false);
}

std::vector<LabeledSentence> ComplexitySentences(size_t count, uint64_t seed) {
  Rng rng(seed);
  std::vector<LabeledSentence> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    LabeledSentence sentence;
    double base;
    switch (rng.Index(3)) {
      case 0:
        sentence.text = EasySentence(rng);
        base = 1.6;
        break;
      case 1:
        sentence.text = MediumSentence(rng);
        base = 3.4;
        break;
      default:
        sentence.text = NormalSentence(rng);
        base = 5.0;
        break;
    }
    const double length = static_cast<double>(CountWords(sentence.text));
    sentence.complexity =
        ClampComplexity(base + 0.04 * length + 0.4 * rng.Normal());
    out.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace leichtkit::desk
