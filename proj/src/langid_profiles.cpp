// Copyright 2026 The stylofair Authors
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

// Reference texts for the bundled language profiles. Plain prose written for
// this project; only their character n-gram statistics matter.

#include <map>
#include <string>

#include "stylofair/langid.hpp"

namespace stylofair::langid {

const std::map<std::string, std::string>& bundled_reference_texts() {
  static const std::map<std::string, std::string> texts = {
      {"en", R"(
I have been thinking about this for a while and I think the main problem is that
people do not really know what they want until they have tried a few different
things. When I started learning to cook I was sure that I would never be able to
make anything more complicated than pasta, but after a couple of months I found
that the hardest part was just getting started. You should not worry too much
about making mistakes, because everyone makes them and that is how you learn.
The same thing is true for most of the hobbies that I have picked up over the
years. It takes time, and there will be days when nothing seems to work, but if
you keep going you will notice that you are getting better. My advice would be
to find a small group of friends who are interested in the same things as you,
so that you can share what you have learned and help each other out. It also
helps to write down what you did each day, because it is easy to forget how far
you have come. Honestly, I think that the people who say they are not talented
are usually the ones who gave up too early. Of course there are exceptions, and
some people really do have a natural ability, but for the rest of us it is
mostly about practice and patience. Another thing that I would recommend is
reading about the history of whatever you are doing. It gives you a much better
understanding of why things are done the way they are, and it makes the whole
experience more interesting. Anyway, that is just my opinion, and I would be
happy to hear what other people think about it. If you have any questions,
feel free to ask, and I will try to answer them as well as I can. We were
talking about this at work yesterday, and one of my colleagues said that she
would rather spend her weekend outside than sitting in front of a screen, which
I can understand, although the weather here has been terrible for weeks. There
is nothing wrong with taking a break when you need one. Which of these options
would you choose, and why? They say that the best time to start was years ago,
and the second best time is right now, so there is no reason to wait any longer.
)"},
      {"de", R"(
Ich habe lange darüber nachgedacht und glaube, dass das Hauptproblem darin
besteht, dass die meisten Menschen nicht wirklich wissen, was sie wollen, bis
sie einige Dinge ausprobiert haben. Als ich angefangen habe zu kochen, war ich
mir sicher, dass ich niemals etwas Schwierigeres als Nudeln zubereiten könnte,
aber nach ein paar Monaten habe ich gemerkt, dass der schwierigste Teil einfach
der Anfang war. Man sollte sich nicht zu viele Sorgen über Fehler machen, denn
jeder macht sie, und so lernt man schließlich. Dasselbe gilt für die meisten
Hobbys, die ich im Laufe der Jahre angefangen habe. Es braucht Zeit, und es wird
Tage geben, an denen nichts zu funktionieren scheint, aber wenn man weitermacht,
merkt man, dass man besser wird. Mein Rat wäre, eine kleine Gruppe von Freunden
zu finden, die sich für dieselben Dinge interessieren, damit man sich
gegenseitig helfen kann. Es hilft auch, jeden Tag aufzuschreiben, was man
gemacht hat, weil man leicht vergisst, wie weit man schon gekommen ist.
Ehrlich gesagt denke ich, dass die Leute, die behaupten, sie seien nicht
talentiert, meistens diejenigen sind, die zu früh aufgegeben haben. Natürlich
gibt es Ausnahmen, und manche Menschen haben wirklich eine natürliche Begabung,
aber für den Rest von uns geht es hauptsächlich um Übung und Geduld. Außerdem
würde ich empfehlen, etwas über die Geschichte dessen zu lesen, was man gerade
tut. Das gibt einem ein viel besseres Verständnis dafür, warum die Dinge so
gemacht werden, und es macht die ganze Erfahrung interessanter. Wir haben
gestern auf der Arbeit darüber gesprochen, und eine Kollegin meinte, sie würde
ihr Wochenende lieber draußen verbringen als vor dem Bildschirm zu sitzen, was
ich verstehen kann, obwohl das Wetter hier seit Wochen schrecklich ist.
)"},
      {"fr", R"(
J'ai réfléchi à cette question pendant un bon moment et je pense que le
principal problème est que les gens ne savent pas vraiment ce qu'ils veulent
avant d'avoir essayé plusieurs choses différentes. Quand j'ai commencé à
apprendre à cuisiner, j'étais sûr que je ne serais jamais capable de préparer
autre chose que des pâtes, mais après quelques mois je me suis rendu compte que
le plus difficile était simplement de commencer. Il ne faut pas trop s'inquiéter
des erreurs, parce que tout le monde en fait et c'est comme ça qu'on apprend. La
même chose est vraie pour la plupart des loisirs que j'ai découverts au fil des
années. Cela prend du temps, et il y aura des jours où rien ne semble
fonctionner, mais si vous continuez, vous remarquerez que vous progressez. Mon
conseil serait de trouver un petit groupe d'amis qui s'intéressent aux mêmes
choses que vous, afin de pouvoir partager ce que vous avez appris et vous aider
les uns les autres. Il est aussi utile d'écrire chaque jour ce que vous avez
fait, car on oublie facilement le chemin parcouru. Honnêtement, je crois que les
personnes qui disent qu'elles n'ont pas de talent sont souvent celles qui ont
abandonné trop tôt. Bien sûr, il y a des exceptions, et certaines personnes ont
vraiment un don naturel, mais pour nous autres c'est surtout une question de
pratique et de patience. Je recommanderais également de lire l'histoire de ce
que vous faites. Cela permet de mieux comprendre pourquoi les choses se font de
cette manière, et l'expérience devient beaucoup plus intéressante. Nous en avons
parlé hier au travail, et une collègue a dit qu'elle préférait passer son
week-end dehors plutôt que devant un écran, ce que je peux comprendre, même si
le temps est affreux ici depuis des semaines.
)"},
      {"es", R"(
He estado pensando en esto durante bastante tiempo y creo que el problema
principal es que la gente no sabe realmente lo que quiere hasta que ha probado
varias cosas diferentes. Cuando empecé a aprender a cocinar estaba seguro de que
nunca sería capaz de hacer nada más complicado que pasta, pero después de un par
de meses descubrí que lo más difícil era simplemente empezar. No deberías
preocuparte demasiado por cometer errores, porque todo el mundo los comete y así
es como se aprende. Lo mismo ocurre con la mayoría de las aficiones que he
empezado a lo largo de los años. Lleva tiempo, y habrá días en los que nada
parezca funcionar, pero si sigues adelante notarás que estás mejorando. Mi
consejo sería encontrar un pequeño grupo de amigos que estén interesados en las
mismas cosas que tú, para que podáis compartir lo que habéis aprendido y
ayudaros mutuamente. También ayuda escribir lo que hiciste cada día, porque es
fácil olvidar todo lo que has avanzado. Sinceramente, creo que las personas que
dicen que no tienen talento suelen ser las que se rindieron demasiado pronto.
Por supuesto que hay excepciones, y algunas personas tienen de verdad una
habilidad natural, pero para el resto de nosotros se trata sobre todo de
práctica y paciencia. Otra cosa que recomendaría es leer sobre la historia de lo
que estás haciendo. Te da una comprensión mucho mejor de por qué las cosas se
hacen de esa manera, y hace que toda la experiencia sea más interesante. Ayer lo
estuvimos hablando en el trabajo, y una compañera dijo que prefería pasar el fin
de semana al aire libre en lugar de estar sentada delante de una pantalla, lo
cual entiendo, aunque el tiempo aquí lleva semanas siendo horrible.
)"},
      {"it", R"(
Ci ho pensato per parecchio tempo e credo che il problema principale sia che le
persone non sanno davvero cosa vogliono finché non hanno provato diverse cose.
Quando ho cominciato a imparare a cucinare ero sicuro che non sarei mai stato
capace di preparare niente di più complicato della pasta, ma dopo un paio di
mesi ho capito che la parte più difficile era semplicemente iniziare. Non
bisogna preoccuparsi troppo degli errori, perché tutti li fanno ed è così che si
impara. Lo stesso vale per la maggior parte degli hobby che ho iniziato nel
corso degli anni. Ci vuole tempo, e ci saranno giorni in cui niente sembra
funzionare, ma se continui ti accorgerai che stai migliorando. Il mio consiglio
sarebbe di trovare un piccolo gruppo di amici che siano interessati alle stesse
cose, in modo da poter condividere quello che avete imparato e aiutarvi a
vicenda. Aiuta anche scrivere ogni giorno quello che hai fatto, perché è facile
dimenticare quanta strada hai fatto. Sinceramente penso che le persone che
dicono di non avere talento siano spesso quelle che si sono arrese troppo
presto. Naturalmente ci sono delle eccezioni, e alcune persone hanno davvero una
capacità naturale, ma per tutti gli altri si tratta soprattutto di pratica e di
pazienza. Un'altra cosa che consiglierei è leggere la storia di quello che stai
facendo. Ti dà una comprensione molto migliore del perché le cose si fanno in
quel modo, e rende tutta l'esperienza più interessante. Ne abbiamo parlato ieri
al lavoro, e una collega ha detto che preferirebbe passare il fine settimana
all'aperto piuttosto che davanti a uno schermo, cosa che capisco, anche se il
tempo qui è terribile da settimane.
)"},
      {"pt", R"(
Estive a pensar nisto durante bastante tempo e acho que o principal problema é
que as pessoas não sabem realmente o que querem até terem experimentado várias
coisas diferentes. Quando comecei a aprender a cozinhar, tinha a certeza de que
nunca seria capaz de fazer nada mais complicado do que massa, mas depois de uns
meses percebi que a parte mais difícil era simplesmente começar. Não te deves
preocupar demasiado com os erros, porque toda a gente os comete e é assim que se
aprende. O mesmo acontece com a maioria dos passatempos que comecei ao longo dos
anos. Leva tempo, e haverá dias em que nada parece funcionar, mas se
continuares vais notar que estás a melhorar. O meu conselho seria encontrar um
pequeno grupo de amigos que se interessem pelas mesmas coisas que tu, para que
possam partilhar o que aprenderam e ajudar-se uns aos outros. Também ajuda
escrever o que fizeste em cada dia, porque é fácil esquecer o quanto já
avançaste. Sinceramente, acho que as pessoas que dizem que não têm talento são
normalmente as que desistiram cedo demais. Claro que há exceções, e algumas
pessoas têm mesmo uma habilidade natural, mas para os restantes trata-se
sobretudo de prática e paciência. Outra coisa que eu recomendaria é ler sobre a
história daquilo que estás a fazer. Dá uma compreensão muito melhor da razão
pela qual as coisas são feitas assim, e torna toda a experiência mais
interessante. Falámos sobre isso ontem no trabalho, e uma colega disse que
preferia passar o fim de semana ao ar livre em vez de ficar sentada em frente a
um ecrã, o que eu compreendo, embora o tempo aqui esteja horrível há semanas.
)"},
      {"nl", R"(
Ik heb hier een tijdje over nagedacht en ik denk dat het grootste probleem is
dat mensen niet echt weten wat ze willen totdat ze een paar verschillende
dingen hebben geprobeerd. Toen ik begon met leren koken, was ik ervan overtuigd
dat ik nooit iets ingewikkelders dan pasta zou kunnen maken, maar na een paar
maanden merkte ik dat het moeilijkste gewoon het beginnen was. Je moet je niet
te veel zorgen maken over fouten, want iedereen maakt ze en zo leer je het. Het
zelfde geldt voor de meeste hobby's die ik in de loop der jaren heb opgepakt.
Het kost tijd, en er zullen dagen zijn waarop niets lijkt te werken, maar als je
doorgaat merk je dat je beter wordt. Mijn advies zou zijn om een kleine groep
vrienden te zoeken die in dezelfde dingen geïnteresseerd zijn, zodat jullie
kunnen delen wat jullie geleerd hebben en elkaar kunnen helpen. Het helpt ook om
elke dag op te schrijven wat je gedaan hebt, omdat je makkelijk vergeet hoe ver
je al gekomen bent. Eerlijk gezegd denk ik dat de mensen die zeggen dat ze geen
talent hebben meestal degenen zijn die te vroeg zijn opgegeven. Natuurlijk zijn
er uitzonderingen, en sommige mensen hebben echt een natuurlijke aanleg, maar
voor de rest van ons gaat het vooral om oefening en geduld. Verder zou ik
aanraden om iets te lezen over de geschiedenis van wat je aan het doen bent. Het
geeft je een veel beter begrip van waarom dingen op die manier gedaan worden, en
het maakt de hele ervaring interessanter. We hadden het er gisteren op het werk
over, en een collega zei dat ze haar weekend liever buiten doorbrengt dan voor
een scherm, wat ik begrijp, hoewel het weer hier al weken verschrikkelijk is.
)"},
      {"ru", R"(
Ya dovolno dolgo ob etom dumal i schitayu, chto glavnaya problema v tom, chto
lyudi na samom dele ne znayut, chego oni khotyat, poka ne poprobuyut neskolko
raznykh veshchey. Kogda ya nachal uchitsya gotovit, ya byl uveren, chto nikogda ne
smogu prigotovit nichego slozhnee makaron, no cherez paru mesyatsev ya ponyal, chto
samoe trudnoe bylo prosto nachat. Ne stoit slishkom perezhivat iz-za oshibok,
potomu chto vse ikh delayut, i imenno tak my uchimsya. To zhe samoe kasaetsya
bolshinstva khobbi, kotorymi ya zanimalsya za eti gody. Na eto nuzhno vremya, i
budut dni, kogda nichego ne poluchaetsya, no esli prodolzhat, to zametish, chto
stanovishsya luchshe. Moy sovet takoy: naydi nebolshuyu gruppu druzey, kotorym
interesny te zhe veshchi, chtoby delitsya tem, chemu nauchilis, i pomogat drug drugu.
Takzhe polezno kazhdyy den zapisyvat, chto ty sdelal, potomu chto legko zabyt,
kakoy put uzhe proyden. Chestno govorya, ya dumayu, chto lyudi, kotorye govoryat, chto
u nikh net talanta, obychno te, kto slishkom rano sdalsya. Konechno, byvayut
isklyucheniya, i u nekotorykh lyudey deystvitelno est prirodnye sposobnosti, no
dlya vsekh ostalnykh eto prezhde vsego vopros praktiki i terpeniya. Eshche ya by
posovetoval pochitat ob istorii togo, chem ty zanimaeshsya. Eto daet gorazdo
luchshee ponimanie togo, pochemu vse delaetsya imenno tak, i delaet ves opyt
gorazdo interesnee. My vchera govorili ob etom na rabote, i odna kollega
skazala, chto predpochla by provesti vykhodnye na ulitse, a ne sidet pered
ekranom, chto ya vpolne ponimayu, khotya pogoda zdes uzhe neskolko nedel uzhasnaya.
)"},
  };
  return texts;
}

}  // namespace stylofair::langid
