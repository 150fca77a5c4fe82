// Copyright 2026 The TextDecepter Authors
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

#include "pos_lexicon.hpp"

namespace textdecepter::detail {

namespace {

// Most-frequent-tag lexicon for common English plus the review-domain
// vocabulary the bundled fixtures use. Multi-tag rows mark noun/verb (and
// similar) ambiguity for the context rules.
constexpr LexEntry kLexicon[] = {
    {"'d", "MD"},
    {"'ll", "MD"},
    {"'m", "VBP"},
    {"'re", "VBP"},
    {"'s", "POS"},
    {"'ve", "VBP"},
    {"a", "DT"},
    {"about", "IN"},
    {"achievement", "NN"},
    {"acting", "NN|VBG"},
    {"actor", "NN"},
    {"actors", "NNS"},
    {"admired", "VBD"},
    {"adore", "VBP"},
    {"affecting", "JJ"},
    {"after", "IN"},
    {"again", "RB"},
    {"against", "IN"},
    {"ago", "RB"},
    {"agreeable", "JJ"},
    {"all", "DT"},
    {"almost", "RB"},
    {"also", "RB"},
    {"always", "RB"},
    {"am", "VBP"},
    {"amazes", "VBZ"},
    {"amusing", "JJ"},
    {"an", "DT"},
    {"and", "CC"},
    {"another", "DT"},
    {"any", "DT"},
    {"anyone", "NN"},
    {"anything", "NN"},
    {"appears", "VBZ"},
    {"are", "VBP"},
    {"as", "IN"},
    {"astonishes", "VBZ"},
    {"at", "IN"},
    {"attainment", "NN"},
    {"audience", "NN"},
    {"away", "RB"},
    {"awful", "JJ"},
    {"awkward", "JJ"},
    {"back", "RB"},
    {"bad", "JJ"},
    {"badly", "RB"},
    {"be", "VB"},
    {"beautiful", "JJ"},
    {"became", "VBD"},
    {"because", "IN"},
    {"become", "VB|VBN"},
    {"becomes", "VBZ"},
    {"been", "VBN"},
    {"before", "IN"},
    {"beginning", "NN|VBG"},
    {"being", "VBG"},
    {"believe", "VBP"},
    {"best", "JJS"},
    {"better", "JJR"},
    {"big", "JJ"},
    {"bigger", "JJR"},
    {"bland", "JJ"},
    {"bliss", "NN"},
    {"bore", "NN"},
    {"bores", "VBZ"},
    {"boring", "JJ"},
    {"both", "DT"},
    {"brilliant", "JJ"},
    {"but", "CC"},
    {"by", "IN"},
    {"came", "VBD"},
    {"can", "MD"},
    {"cast", "NN"},
    {"catastrophe", "NN"},
    {"certain", "JJ"},
    {"chaotic", "JJ"},
    {"character", "NN"},
    {"characters", "NNS"},
    {"charming", "JJ"},
    {"cherish", "VBP"},
    {"chore", "NN"},
    {"chuckles", "NNS|VBZ"},
    {"classic", "NN"},
    {"clever", "JJ"},
    {"clumsy", "JJ"},
    {"cluttered", "JJ"},
    {"come", "VB|VBP"},
    {"comes", "VBZ"},
    {"comic", "JJ"},
    {"comical", "JJ"},
    {"could", "MD"},
    {"crawls", "VBZ"},
    {"cunning", "JJ"},
    {"dazzling", "JJ"},
    {"debacle", "NN"},
    {"decent", "JJ"},
    {"delight", "NN"},
    {"delightful", "JJ"},
    {"despised", "VBD"},
    {"detested", "VBD"},
    {"dialogue", "NN"},
    {"did", "VBD"},
    {"director", "NN"},
    {"disappoints", "VBZ"},
    {"disaster", "NN"},
    {"disheartens", "VBZ"},
    {"dismally", "RB"},
    {"disorderly", "JJ"},
    {"do", "VBP"},
    {"does", "VBZ"},
    {"doing", "VBG"},
    {"done", "VBN"},
    {"down", "RP"},
    {"drags", "VBZ"},
    {"dreadfully", "RB"},
    {"dreary", "JJ"},
    {"dull", "JJ"},
    {"each", "DT"},
    {"eight", "CD"},
    {"end", "NN|VB"},
    {"ending", "NN|VBG"},
    {"enjoyable", "JJ"},
    {"enjoyed", "VBD"},
    {"ensemble", "NN"},
    {"errand", "NN"},
    {"even", "RB"},
    {"every", "DT"},
    {"everyone", "NN"},
    {"everything", "NN"},
    {"evil", "JJ"},
    {"execution", "NN"},
    {"fails", "VBZ"},
    {"falsehoods", "NNS"},
    {"falters", "VBZ"},
    {"feeble", "JJ"},
    {"feel", "VBP"},
    {"felt", "VBD"},
    {"few", "JJ"},
    {"fiasco", "NN"},
    {"film", "NN"},
    {"final", "JJ"},
    {"finally", "RB"},
    {"fine", "JJ"},
    {"finish", "NN|VB"},
    {"firmly", "RB"},
    {"first", "JJ"},
    {"five", "CD"},
    {"flat", "JJ"},
    {"flick", "NN"},
    {"flimsy", "JJ"},
    {"foolish", "JJ"},
    {"for", "IN"},
    {"four", "CD"},
    {"frail", "JJ"},
    {"from", "IN"},
    {"full", "JJ"},
    {"funny", "JJ"},
    {"game", "NN"},
    {"gave", "VBD"},
    {"gem", "NN"},
    {"genuine", "JJ"},
    {"genuinely", "RB"},
    {"get", "VB|VBP"},
    {"gets", "VBZ"},
    {"giggles", "NNS|VBZ"},
    {"give", "VB|VBP"},
    {"gives", "VBZ"},
    {"glows", "VBZ"},
    {"go", "VB|VBP"},
    {"goes", "VBZ"},
    {"going", "VBG"},
    {"good", "JJ"},
    {"gorgeous", "JJ"},
    {"got", "VBD"},
    {"graceless", "JJ"},
    {"great", "JJ"},
    {"had", "VBD"},
    {"half", "NN"},
    {"has", "VBZ"},
    {"hated", "VBD"},
    {"haunting", "JJ"},
    {"have", "VBP"},
    {"having", "VBG"},
    {"he", "PRP"},
    {"heart", "NN"},
    {"her", "PRP$"},
    {"here", "RB"},
    {"high", "JJ"},
    {"hilarious", "JJ"},
    {"him", "PRP"},
    {"his", "PRP$"},
    {"hollow", "JJ"},
    {"hour", "NN"},
    {"hours", "NNS"},
    {"how", "WRB"},
    {"humor", "NN"},
    {"i", "PRP"},
    {"idea", "NN"},
    {"ideas", "NNS"},
    {"if", "IN"},
    {"imax", "NN"},
    {"impresses", "VBZ"},
    {"in", "IN"},
    {"inane", "JJ"},
    {"indelible", "JJ"},
    {"ingenious", "JJ"},
    {"instead", "RB"},
    {"into", "IN"},
    {"is", "VBZ"},
    {"it", "PRP"},
    {"its", "PRP$"},
    {"jeopardizes", "VBZ"},
    {"jeopardizing", "VBG"},
    {"jewel", "NN"},
    {"joy", "NN"},
    {"jumble", "NN"},
    {"just", "RB"},
    {"keep", "VB|VBP"},
    {"keeps", "VBZ"},
    {"kept", "VBD|VBN"},
    {"kidding", "VBG|NN"},
    {"king", "NN"},
    {"knew", "VBD"},
    {"know", "VB|VBP"},
    {"knows", "VBZ"},
    {"landmark", "NN"},
    {"lands", "VBZ|NNS"},
    {"last", "JJ"},
    {"laughs", "NNS|VBZ"},
    {"least", "JJS"},
    {"leave", "VB|VBP"},
    {"leaves", "VBZ|NNS"},
    {"less", "JJR"},
    {"levity", "NN"},
    {"like", "IN"},
    {"lion", "NN"},
    {"little", "JJ"},
    {"long", "JJ"},
    {"looks", "VBZ|NNS"},
    {"lousy", "JJ"},
    {"love", "VBP"},
    {"loved", "VBD"},
    {"lovely", "JJ"},
    {"low", "JJ"},
    {"made", "VBD|VBN"},
    {"main", "JJ"},
    {"make", "VB|VBP"},
    {"makes", "VBZ"},
    {"many", "JJ"},
    {"marvelous", "JJ"},
    {"masterpiece", "NN"},
    {"may", "MD"},
    {"maybe", "RB"},
    {"me", "PRP"},
    {"melodies", "NNS"},
    {"memorable", "JJ"},
    {"mess", "NN"},
    {"messy", "JJ"},
    {"might", "MD"},
    {"minute", "NN"},
    {"minutes", "NNS"},
    {"moment", "NN"},
    {"moments", "NNS"},
    {"monotonous", "JJ"},
    {"more", "JJR"},
    {"most", "JJS"},
    {"movie", "NN"},
    {"moving", "JJ"},
    {"much", "JJ"},
    {"muddle", "NN"},
    {"music", "NN"},
    {"must", "MD"},
    {"my", "PRP$"},
    {"n't", "RB"},
    {"nearly", "RB"},
    {"never", "RB"},
    {"new", "JJ"},
    {"next", "JJ"},
    {"nice", "JJ"},
    {"nine", "CD"},
    {"no", "DT"},
    {"nor", "CC"},
    {"not", "RB"},
    {"nothing", "NN"},
    {"now", "RB"},
    {"numbs", "VBZ"},
    {"odd", "JJ"},
    {"of", "IN"},
    {"off", "RP"},
    {"often", "RB"},
    {"old", "JJ"},
    {"on", "IN"},
    {"once", "RB"},
    {"one", "CD"},
    {"only", "RB"},
    {"or", "CC"},
    {"other", "JJ"},
    {"our", "PRP$"},
    {"out", "RP"},
    {"over", "IN"},
    {"own", "JJ"},
    {"pacing", "NN|VBG"},
    {"peculiar", "JJ"},
    {"performance", "NN"},
    {"performances", "NNS"},
    {"perhaps", "RB"},
    {"picture", "NN"},
    {"pile", "NN|VB|VBP"},
    {"pleasant", "JJ"},
    {"pleasure", "NN"},
    {"plods", "VBZ"},
    {"plot", "NN"},
    {"poignant", "JJ"},
    {"poor", "JJ"},
    {"poorly", "RB"},
    {"premise", "NN"},
    {"pretty", "JJ"},
    {"quiet", "JJ"},
    {"quite", "RB"},
    {"rather", "RB"},
    {"real", "JJ"},
    {"really", "RB"},
    {"reckon", "VBP"},
    {"released", "VBD|VBN"},
    {"relished", "VBD"},
    {"resplendent", "JJ"},
    {"rest", "NN"},
    {"rhythm", "NN"},
    {"roaring", "JJ"},
    {"rotten", "JJ"},
    {"routine", "NN"},
    {"run", "NN|VB|VBP"},
    {"said", "VBD|VBN"},
    {"same", "JJ"},
    {"savored", "VBD"},
    {"saw", "VBD"},
    {"say", "VB|VBP"},
    {"says", "VBZ"},
    {"scene", "NN"},
    {"scenes", "NNS"},
    {"screenplay", "NN"},
    {"script", "NN"},
    {"second", "JJ"},
    {"see", "VB|VBP"},
    {"seem", "VB|VBP"},
    {"seemed", "VBD"},
    {"seems", "VBZ"},
    {"seen", "VBN"},
    {"sees", "VBZ"},
    {"senseless", "JJ"},
    {"sequel", "NN"},
    {"seven", "CD"},
    {"several", "JJ"},
    {"shall", "MD"},
    {"shambles", "NN"},
    {"she", "PRP"},
    {"shines", "VBZ"},
    {"short", "JJ"},
    {"should", "MD"},
    {"show", "NN|VB"},
    {"shrewd", "JJ"},
    {"silly", "JJ"},
    {"since", "IN"},
    {"six", "CD"},
    {"sloppy", "JJ"},
    {"small", "JJ"},
    {"smaller", "JJR"},
    {"smart", "JJ"},
    {"smile", "NN|VB"},
    {"so", "RB"},
    {"solid", "JJ"},
    {"some", "DT"},
    {"someone", "NN"},
    {"something", "NN"},
    {"sometimes", "RB"},
    {"song", "NN"},
    {"songs", "NNS"},
    {"soon", "RB"},
    {"soundtrack", "NN"},
    {"sparkle", "NN|VB|VBP"},
    {"sparkles", "VBZ"},
    {"splendid", "JJ"},
    {"splendidly", "RB"},
    {"squanders", "VBZ"},
    {"start", "NN|VB"},
    {"stifling", "VBG"},
    {"still", "RB"},
    {"stirring", "JJ"},
    {"story", "NN"},
    {"strange", "JJ"},
    {"stumbles", "VBZ"},
    {"stupid", "JJ"},
    {"success", "NN"},
    {"such", "PDT"},
    {"superb", "JJ"},
    {"superbly", "RB"},
    {"surprise", "NN|VB"},
    {"take", "VB|VBP"},
    {"takes", "VBZ"},
    {"tale", "NN"},
    {"task", "NN"},
    {"tedious", "JJ"},
    {"ten", "CD"},
    {"terrible", "JJ"},
    {"terribly", "RB"},
    {"than", "IN"},
    {"that", "DT"},
    {"the", "DT"},
    {"their", "PRP$"},
    {"them", "PRP"},
    {"then", "RB"},
    {"there", "EX"},
    {"these", "DT"},
    {"they", "PRP"},
    {"thing", "NN"},
    {"things", "NNS"},
    {"think", "VB|VBP"},
    {"thinks", "VBZ"},
    {"third", "JJ"},
    {"this", "DT"},
    {"those", "DT"},
    {"thought", "VBD|VBN"},
    {"three", "CD"},
    {"through", "IN"},
    {"time", "NN"},
    {"times", "NNS"},
    {"to", "TO"},
    {"too", "RB"},
    {"took", "VBD"},
    {"touching", "JJ"},
    {"transpires", "VBZ"},
    {"treasured", "VBD"},
    {"triumph", "NN"},
    {"truly", "RB"},
    {"tunes", "NNS|VBZ"},
    {"twice", "RB"},
    {"two", "CD"},
    {"under", "IN"},
    {"undermines", "VBZ"},
    {"undermining", "VBG"},
    {"unforgettable", "JJ"},
    {"ungainly", "JJ"},
    {"unsatisfactory", "JJ"},
    {"until", "IN"},
    {"up", "RP"},
    {"upon", "IN"},
    {"uproarious", "JJ"},
    {"us", "PRP"},
    {"very", "RB"},
    {"victory", "NN"},
    {"video", "NN"},
    {"viewer", "NN"},
    {"viewers", "NNS"},
    {"voice", "NN"},
    {"want", "VB|VBP"},
    {"wanted", "VBD"},
    {"wants", "VBZ"},
    {"was", "VBD"},
    {"waste", "NN|VB"},
    {"wastes", "VBZ"},
    {"watch", "VB|VBP"},
    {"watched", "VBD|VBN"},
    {"watching", "VBG"},
    {"we", "PRP"},
    {"weak", "JJ"},
    {"wearies", "VBZ"},
    {"weird", "JJ"},
    {"well", "RB"},
    {"went", "VBD"},
    {"were", "VBD"},
    {"what", "WP"},
    {"when", "WRB"},
    {"where", "WRB"},
    {"which", "WDT"},
    {"while", "IN"},
    {"who", "WP"},
    {"whole", "JJ"},
    {"whom", "WP"},
    {"whose", "WP$"},
    {"why", "WRB"},
    {"will", "MD"},
    {"winning", "JJ"},
    {"winsome", "JJ"},
    {"wit", "NN"},
    {"with", "IN"},
    {"within", "IN"},
    {"without", "IN"},
    {"wonderfully", "RB"},
    {"work", "NN|VB"},
    {"works", "VBZ|NNS"},
    {"worse", "JJR"},
    {"worst", "JJS"},
    {"would", "MD"},
    {"year", "NN"},
    {"years", "NNS"},
    {"yet", "CC"},
    {"you", "PRP"},
    {"young", "JJ"},
    {"your", "PRP$"},
};

}  // namespace

std::span<const LexEntry> builtin_tag_lexicon() {
  return {kLexicon, sizeof(kLexicon) / sizeof(kLexicon[0])};
}

}  // namespace textdecepter::detail
